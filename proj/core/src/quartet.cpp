#include "rene/quartet.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "rene/script.hpp"

namespace rene {

QuadrilateralScene build_scene() {
    VarTablePtr table = VarTable::standard();
    RatFunc m = RatFunc::variable(table, std::size_t{0});
    RatFunc n = RatFunc::variable(table, std::size_t{1});
    RatFunc M = RatFunc::variable(table, std::size_t{2});
    RatFunc N = RatFunc::variable(table, std::size_t{3});

    Triangle t1 = te(m, n); // A, D, B
    Triangle t2 = te(M, N); // A, D, C

    Point A = t1.v1();
    Point D = t1.v2();
    Point B = t1.v3();
    Point C = t2.v3();

    Triangle bcd(B, C, D);
    Triangle abd(A, B, D);
    Triangle abc(A, B, C);

    return QuadrilateralScene{
        table,
        A,
        B,
        C,
        D,
        isogonal_conjugate(bcd, A),
        isogonal_conjugate(t2, B), // triangle ADC
        isogonal_conjugate(abd, C),
        isogonal_conjugate(abc, D),
    };
}

bool replay_one_line_proof(const QuadrilateralScene& scene) {
    return de_sq(scene.Bstar, scene.A) == de_sq(scene.Cstar, scene.A);
}

VerificationReport verify_quartet(const QuadrilateralScene& scene) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{
        {},
        circumradius_sq(scene.Bstar, scene.Cstar, scene.Dstar),
        golden_bstar(scene.params),
        golden_cstar(scene.params),
        {},
        {},
    };

    // Two equalities per vertex; the third distance agrees by transitivity.
    struct Claim {
        const char* center;
        const Point* p;
        const char* n1;
        const Point* s1;
        const char* n2;
        const Point* s2;
        const char* n3;
        const Point* s3;
    };
    const std::array<Claim, 4> claims{{
        {"A", &scene.A, "Bstar", &scene.Bstar, "Cstar", &scene.Cstar, "Dstar", &scene.Dstar},
        {"B", &scene.B, "Astar", &scene.Astar, "Cstar", &scene.Cstar, "Dstar", &scene.Dstar},
        {"C", &scene.C, "Astar", &scene.Astar, "Bstar", &scene.Bstar, "Dstar", &scene.Dstar},
        {"D", &scene.D, "Astar", &scene.Astar, "Bstar", &scene.Bstar, "Cstar", &scene.Cstar},
    }};
    for (const Claim& c : claims) {
        RatFunc d1 = de_sq(*c.p, *c.s1);
        RatFunc d2 = de_sq(*c.p, *c.s2);
        RatFunc d3 = de_sq(*c.p, *c.s3);
        report.proof_equalities.push_back(
            {std::string(c.center) + "_equidistant_" + c.n1 + "_" + c.n2, d1 == d2});
        report.proof_equalities.push_back(
            {std::string(c.center) + "_equidistant_" + c.n2 + "_" + c.n3, d2 == d3});
    }

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

RatFunc leversha_radius_formula(const VarTablePtr& table) {
    RatFunc m = RatFunc::variable(table, std::size_t{0});
    RatFunc n = RatFunc::variable(table, std::size_t{1});
    RatFunc M = RatFunc::variable(table, std::size_t{2});
    RatFunc N = RatFunc::variable(table, std::size_t{3});
    RatFunc one = RatFunc::one(table);

    RatFunc num = (N - n) * (N * n + one) * (m * m + one) * (M * M + one);
    RatFunc den = ((M * N - one) * (m * n - one) + (M + N) * (n + m)) *
                  (M * N * (n + m) - m * n * (M + N) + M + N - m - n);
    return num / den;
}

namespace {

// Shared denominator of the closed-form conjugate locations.
constexpr const char* kGoldenDen =
    "((M*N*(m*n-1)+(M+N)*(m+n)-m*n+1)*(M*N*(m+n)-m*n*(M+N)+M+N-m-n))";

const char* kGoldenBstarX =
    "(M*m+M-m+1)*(M*m-M+m+1)*(N*n+1)*(N-n)";
const char* kGoldenBstarY =
    "2*(N*n+1)*(N-n)*(M*m+1)*(M-m)";

Point golden_point(const VarTablePtr& table, const std::string& x_num,
                   const std::string& y_num) {
    return Point(script::eval_ratfunc_text(x_num + "/" + kGoldenDen, table),
                 script::eval_ratfunc_text(y_num + "/" + kGoldenDen, table));
}

} // namespace

Point golden_bstar(const VarTablePtr& table) {
    return golden_point(table, kGoldenBstarX, kGoldenBstarY);
}

Point golden_cstar(const VarTablePtr& table) {
    return golden_point(table, kGoldenBstarX, std::string("-") + kGoldenBstarY);
}

bool leversha_radius_check(const QuadrilateralScene& scene) {
    RatFunc r = leversha_radius_formula(scene.params);
    return circumradius_sq(scene.Bstar, scene.Cstar, scene.Dstar) == r * r;
}

bool mirror_check(const QuadrilateralScene& scene) {
    bool same_x = scene.Bstar.x() == scene.Cstar.x();
    bool neg_y = scene.Bstar.y() == -scene.Cstar.y();
    bool reflected = reflect_over_line(scene.Bstar, scene.A, scene.D) == scene.Cstar;
    return same_x && neg_y && reflected;
}

bool VerificationReport::all_passed() const {
    auto ok = [](const CheckResult& c) { return c.passed; };
    return std::all_of(proof_equalities.begin(), proof_equalities.end(), ok) &&
           std::all_of(mirror_pairs.begin(), mirror_pairs.end(), ok);
}

std::string VerificationReport::certificate() const {
    std::ostringstream os;
    os << "LEVERSHA-CERTIFICATE v1\n";
    for (const CheckResult& c : proof_equalities) {
        os << c.label << ": " << (c.passed ? "PASS" : "FAIL") << "\n";
    }
    for (const CheckResult& c : mirror_pairs) {
        os << c.label << ": " << (c.passed ? "PASS" : "FAIL") << "\n";
    }
    os << "RADIUS_SQ = " << radius_sq.str() << "\n";
    os << "BSTAR = " << bstar_formula.str() << "\n";
    os << "CSTAR = " << cstar_formula.str() << "\n";
    os << "ELAPSED_MS = " << elapsed.count() << "\n";
    return os.str();
}

VerificationReport run_all_checks(const QuadrilateralScene& scene,
                                  unsigned spot_trials, std::uint64_t spot_seed) {
    const auto start = std::chrono::steady_clock::now();

    VerificationReport report = verify_quartet(scene);
    report.proof_equalities.insert(
        report.proof_equalities.begin(),
        {"one_line_proof", replay_one_line_proof(scene)});

    report.proof_equalities.push_back(
        {"golden_Bstar", scene.Bstar == report.bstar_formula});
    report.proof_equalities.push_back(
        {"golden_Cstar", scene.Cstar == report.cstar_formula});

    RatFunc r = leversha_radius_formula(scene.params);
    report.proof_equalities.push_back({"radius_formula", report.radius_sq == r * r});

    report.mirror_pairs.push_back(
        {"mirror_x_Bstar_Cstar", scene.Bstar.x() == scene.Cstar.x()});
    report.mirror_pairs.push_back(
        {"mirror_y_Bstar_Cstar", scene.Bstar.y() == -scene.Cstar.y()});
    report.mirror_pairs.push_back(
        {"mirror_reflect_AD",
         reflect_over_line(scene.Bstar, scene.A, scene.D) == scene.Cstar});

    if (spot_trials > 0) {
        report.mirror_pairs.push_back(
            {"numeric_spotcheck_" + std::to_string(spot_trials),
             numeric_spotcheck(scene, spot_trials, spot_seed)});
    }

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace rene
