#include "rene/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rene {

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::var(std::size_t arity, std::size_t index, std::uint32_t power) {
    std::vector<std::uint32_t> e(arity, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
}

unsigned Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial r = o;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
    return r;
}

Monomial Monomial::componentwise_min(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(r.exps_[i], b.exps_[i]);
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree();
    unsigned db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i];
    }
    return false;
}

// ---- Polynomial construction ------------------------------------------------

Polynomial Polynomial::zero(VarTablePtr table) { return Polynomial(std::move(table), {}); }

Polynomial Polynomial::constant(VarTablePtr table, Rational c) {
    TermMap t;
    if (!c.is_zero()) t.emplace(Monomial::unit(table->arity()), std::move(c));
    return Polynomial(std::move(table), std::move(t));
}

Polynomial Polynomial::variable(VarTablePtr table, std::size_t index) {
    TermMap t;
    t.emplace(Monomial::var(table->arity(), index), Rational(1));
    return Polynomial(std::move(table), std::move(t));
}

Polynomial Polynomial::variable(VarTablePtr table, std::string_view name) {
    auto idx = table->index(name);
    if (!idx) throw Error("unknown indeterminate '" + std::string(name) + "'");
    return variable(std::move(table), *idx);
}

Polynomial Polynomial::from_terms(VarTablePtr table, TermMap terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.arity() != table->arity()) {
            throw Error("monomial arity does not match the table");
        }
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    return Polynomial(std::move(table), std::move(terms));
}

// ---- queries ----------------------------------------------------------------

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           terms_.begin()->second.is_one();
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
    return d;
}

bool Polynomial::contains_var(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [var](const auto& t) { return t.first.exp(var) > 0; });
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

// ---- arithmetic -------------------------------------------------------------

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_table(table_, o.table_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_table(table_, o.table_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_table(a.table_, b.table_);
    Polynomial r = Polynomial::zero(a.table_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = Polynomial::one(table_);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(table_);
    Polynomial r = *this;
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return zero(table_);
    Polynomial r = zero(table_);
    for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono * m, coeff * c);
    return r;
}

// ---- evaluation -------------------------------------------------------------

Rational Polynomial::eval(const std::map<std::string, Rational>& subst) const {
    const std::size_t arity = table_->arity();
    std::vector<const Rational*> bound(arity, nullptr);
    for (const auto& [name, val] : subst) {
        if (auto idx = table_->index(name)) bound[*idx] = &val;
    }
    // Power tables per indeterminate, filled lazily up to the needed degree.
    std::vector<std::vector<Rational>> powers(arity);
    auto power_of = [&](std::size_t v, std::uint32_t e) -> const Rational& {
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(Rational(1));
        while (tab.size() <= e) tab.push_back(tab.back() * *bound[v]);
        return tab[e];
    };

    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t v = 0; v < arity; ++v) {
            const std::uint32_t e = m.exp(v);
            if (e == 0) continue;
            if (!bound[v]) {
                throw MissingBinding("no value bound for indeterminate '" + table_->name(v) + "'");
            }
            term *= power_of(v, e);
        }
        total += term;
    }
    return total;
}

// ---- content / primitive part -----------------------------------------------

std::pair<Rational, Polynomial> Polynomial::content_split() const {
    if (terms_.empty()) return {Rational(0), *this};
    // content = gcd(numerators) / lcm(denominators), signed by the leading
    // coefficient so the primitive part's leading coefficient is positive.
    BigInt g = 0;
    BigInt l = 1;
    for (const auto& [m, c] : terms_) {
        g = gcd_of(g, abs_of(c.num()));
        l = lcm_of(l, c.den());
    }
    Rational content(leading_coeff().sign() < 0 ? -g : g, l);
    Polynomial prim = scaled(content.reciprocal());
    return {std::move(content), std::move(prim)};
}

// ---- exact division ----------------------------------------------------------

Polynomial divexact(const Polynomial& a, const Polynomial& b) {
    require_same_table(a.table(), b.table());
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return a;
    if (b.is_one()) return a;

    const Monomial& lmb = b.leading_monomial();
    const Rational& lcb = b.leading_coeff();
    Polynomial q = Polynomial::zero(a.table());
    Polynomial r = a;
    while (!r.is_zero()) {
        const Monomial& lmr = r.leading_monomial();
        if (!lmb.divides(lmr)) {
            throw InexactDivision("polynomial division leaves a remainder");
        }
        Monomial qm = lmb.quotient_of(lmr);
        Rational qc = r.leading_coeff() / lcb;
        q.add_term(qm, qc);
        r -= b.times_monomial(qm, qc);
    }
    return q;
}

// ---- printing ----------------------------------------------------------------

namespace {

void append_term(std::ostream& os, const VarTable& table, const Monomial& m,
                 const Rational& coeff_abs) {
    bool printed = false;
    if (!coeff_abs.is_one() || m.is_unit()) {
        os << coeff_abs.str();
        printed = true;
    }
    for (std::size_t v = 0; v < m.arity(); ++v) {
        if (m.exp(v) == 0) continue;
        if (printed) os << "*";
        os << table.name(v);
        if (m.exp(v) > 1) os << "^" << m.exp(v);
        printed = true;
    }
}

} // namespace

std::string Polynomial::str(bool factor_content) const {
    if (terms_.empty()) return "0";

    if (factor_content) {
        auto [content, prim] = content_split();
        if (!content.is_one() && prim.term_count() > 1) {
            return content.str() + "*(" + prim.str(false) + ")";
        }
    }

    std::ostringstream os;
    bool first = true;
    // rbegin: descending graded lex, highest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        append_term(os, *table_, m, c.abs());
    }
    return os.str();
}

} // namespace rene
