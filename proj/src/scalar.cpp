#include "dsp/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace dsp {

// ---------------------------------------------------------------- variables

namespace {
struct VarRegistry {
    std::mutex mu;
    std::unordered_map<std::string, VarId> ids;
    std::vector<std::string> names;
};
VarRegistry& registry() {
    static VarRegistry r;
    return r;
}
}  // namespace

VarId var_id(std::string_view name) {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    std::string key(name);
    auto it = r.ids.find(key);
    if (it != r.ids.end()) return it->second;
    VarId id = static_cast<VarId>(r.names.size());
    r.names.push_back(key);
    r.ids.emplace(std::move(key), id);
    return id;
}

const std::string& var_name(VarId id) {
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    return r.names.at(id);
}

bool var_less(VarId a, VarId b) {
    if (a == b) return false;
    return var_name(a) < var_name(b);
}

// ---------------------------------------------------------------- monomials

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < factors.size() || j < other.factors.size()) {
        if (j == other.factors.size() ||
            (i < factors.size() && var_less(factors[i].first, other.factors[j].first))) {
            out.factors.push_back(factors[i++]);
        } else if (i == factors.size() || var_less(other.factors[j].first, factors[i].first)) {
            out.factors.push_back(other.factors[j++]);
        } else {
            out.factors.emplace_back(factors[i].first, factors[i].second + other.factors[j].second);
            ++i, ++j;
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divide_by(const Monomial& other) const {
    Monomial out;
    std::size_t i = 0;
    for (const auto& [v, e] : other.factors) {
        while (i < factors.size() && var_less(factors[i].first, v)) out.factors.push_back(factors[i++]);
        if (i == factors.size() || factors[i].first != v || factors[i].second < e) return std::nullopt;
        if (factors[i].second > e) out.factors.emplace_back(v, factors[i].second - e);
        ++i;
    }
    while (i < factors.size()) out.factors.push_back(factors[i++]);
    return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (var_less(a.factors[i].first, b.factors[j].first)) {
            ++i;
        } else if (var_less(b.factors[j].first, a.factors[i].first)) {
            ++j;
        } else {
            out.factors.emplace_back(a.factors[i].first,
                                     std::min(a.factors[i].second, b.factors[j].second));
            ++i, ++j;
        }
    }
    return out;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // lex: walk the merged variable list in name order; higher exponent on
    // the earliest differing variable wins
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first == b.factors[j].first) {
            if (a.factors[i].second != b.factors[j].second)
                return a.factors[i].second < b.factors[j].second ? -1 : 1;
            ++i, ++j;
        } else if (var_less(a.factors[i].first, b.factors[j].first)) {
            return 1;  // a has positive exponent where b has zero
        } else {
            return -1;
        }
    }
    if (i < a.factors.size()) return 1;
    if (j < b.factors.size()) return -1;
    return 0;
}

// -------------------------------------------------------------- polynomials

Poly::Poly(long v) {
    if (v != 0) terms_.push_back({Monomial::one(), Rational(v)});
}

Poly::Poly(const Rational& v) {
    if (v != 0) terms_.push_back({Monomial::one(), v});
}

Poly Poly::variable(std::string_view name) {
    Poly p;
    Monomial m;
    m.factors.emplace_back(var_id(name), 1);
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return Monomial::cmp(a.mono, b.mono) > 0; });
    Poly p;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_[0].coeff;
}

std::uint64_t Poly::degree() const {
    return terms_.empty() ? 0 : terms_[0].mono.total_degree();
}

std::vector<VarId> Poly::variables() const {
    std::vector<VarId> vars;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.factors)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end(), var_less);
    return vars;
}

Poly Poly::operator+(const Poly& other) const {
    Poly out;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        int c;
        if (i == terms_.size())
            c = -1;
        else if (j == other.terms_.size())
            c = 1;
        else
            c = Monomial::cmp(terms_[i].mono, other.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + other.terms_[j].coeff;
            if (s != 0) out.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
    if (is_zero() || other.is_zero()) return Poly();
    auto cmp = [](const Monomial& a, const Monomial& b) { return Monomial::cmp(a, b) > 0; };
    std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
    Poly out;
    for (auto& [m, c] : acc)
        if (c != 0) out.terms_.push_back({m, c});
    return out;
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly();
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Poly Poly::operator/(const Rational& c) const {
    if (c == 0) throw DivisionByZero();
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff /= c;
    return out;
}

bool Poly::operator==(const Poly& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

std::optional<Poly> Poly::divide_exact(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) return std::nullopt;
    if (dividend.is_zero()) return Poly();
    if (divisor.is_constant()) return dividend / divisor.constant_value();
    Poly rem = dividend;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        auto qm = rem.leading_term().mono.divide_by(divisor.leading_term().mono);
        if (!qm) return std::nullopt;
        Term qt{*qm, rem.leading_term().coeff / divisor.leading_term().coeff};
        Poly qp;
        qp = Poly::from_terms({qt});
        rem = rem - qp * divisor;
        quot.push_back(std::move(qt));
    }
    return Poly::from_terms(std::move(quot));
}

Rational Poly::content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_class n = t.coeff.get_num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = t.coeff.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (terms_[0].coeff < 0) c = -c;
    return c;
}

Monomial Poly::monomial_gcd() const {
    Monomial g = terms_.front().mono;
    for (std::size_t i = 1; i < terms_.size() && !g.is_one(); ++i)
        g = Monomial::gcd(g, terms_[i].mono);
    return g;
}

Poly gcd_univariate(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        // univariate remainder of x by y
        Poly r = x;
        while (!r.is_zero() && r.degree() >= y.degree()) {
            auto qm = r.leading_term().mono.divide_by(y.leading_term().mono);
            if (!qm) break;
            Term qt{*qm, r.leading_term().coeff / y.leading_term().coeff};
            r = r - Poly::from_terms({qt}) * y;
        }
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x / x.content();
}

// ------------------------------------------------------------------ scalars

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1L);
        return;
    }
    Monomial mg = Monomial::gcd(num_.monomial_gcd(), den_.monomial_gcd());
    if (!mg.is_one()) {
        Poly divisor = Poly::from_terms({Term{mg, Rational(1)}});
        num_ = *Poly::divide_exact(num_, divisor);
        den_ = *Poly::divide_exact(den_, divisor);
    }
    if (!den_.is_constant()) {
        if (auto q = Poly::divide_exact(num_, den_)) {
            num_ = std::move(*q);
            den_ = Poly(1L);
        } else if (!num_.is_constant()) {
            if (auto q2 = Poly::divide_exact(den_, num_)) {
                num_ = Poly(1L);
                den_ = std::move(*q2);
            } else {
                auto vn = num_.variables(), vd = den_.variables();
                if (vn.size() == 1 && vd.size() == 1 && vn[0] == vd[0]) {
                    Poly g = gcd_univariate(num_, den_);
                    if (!g.is_constant()) {
                        num_ = *Poly::divide_exact(num_, g);
                        den_ = *Poly::divide_exact(den_, g);
                    }
                }
            }
        }
    }
    Rational c = den_.content();
    num_ = num_ / c;
    den_ = den_ / c;
}

Rational Scalar::rational_value() const {
    return num_.constant_value() / den_.constant_value();
}

bool Scalar::equals(const Scalar& other) const {
    return num_ * other.den_ == other.num_ * den_;
}

Scalar Scalar::operator+(const Scalar& other) const {
    if (den_ == other.den_) return Scalar(num_ + other.num_, den_);
    return Scalar(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
    return Scalar(num_ * other.num_, den_ * other.den_);
}

Scalar Scalar::operator/(const Scalar& other) const {
    if (other.is_zero()) throw DivisionByZero();
    return Scalar(num_ * other.den_, den_ * other.num_);
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar out(1L), base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

// ----------------------------------------------------------------- printing

std::string to_string(const Rational& r) {
    return r.get_str();
}

namespace {
std::string monomial_string(const Monomial& m) {
    std::string out;
    for (const auto& [v, e] : m.factors) {
        for (std::uint32_t k = 0; k < e; ++k) {
            if (!out.empty()) out += "*";
            out += var_name(v);
        }
    }
    return out;
}
}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
        if (first) {
            if (t.coeff < 0) out += "-";
            first = false;
        } else {
            out += t.coeff < 0 ? " - " : " + ";
        }
        if (t.mono.is_one()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += monomial_string(t.mono);
        } else {
            out += mag.get_str() + "*" + monomial_string(t.mono);
        }
    }
    return out;
}

std::string to_string(const Scalar& s) {
    if (s.den() == Poly(1L)) return to_string(s.num());
    return "(" + to_string(s.num()) + ")/(" + to_string(s.den()) + ")";
}

}  // namespace dsp
