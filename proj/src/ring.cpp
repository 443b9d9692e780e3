#include "bkdv/ring.hpp"

#include <algorithm>

namespace bkdv {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::gen(GenId g, int k) {
    Monomial m;
    if (k != 0) m.e_.emplace_back(g, k);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [g, k] : e_) d += k;
    return d;
}

int Monomial::exponent(GenId g) const {
    for (auto& [h, k] : e_)
        if (h == g) return k;
    return 0;
}

void Monomial::set_exponent(GenId g, int k) {
    auto it = std::lower_bound(e_.begin(), e_.end(), g,
                               [](const auto& p, GenId x) { return p.first < x; });
    if (it != e_.end() && it->first == g) {
        if (k == 0)
            e_.erase(it);
        else
            it->second = k;
    } else if (k != 0) {
        e_.insert(it, {g, k});
    }
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first < b->first)
            r.e_.push_back(*a++);
        else if (b->first < a->first)
            r.e_.push_back(*b++);
        else {
            int k = a->second + b->second;
            if (k != 0) r.e_.emplace_back(a->first, k);
            ++a, ++b;
        }
    }
    r.e_.insert(r.e_.end(), a, e_.end());
    r.e_.insert(r.e_.end(), b, o.e_.end());
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto a = e_.begin(), b = o.e_.begin();
    while (b != o.e_.end()) {
        while (a != e_.end() && a->first < b->first) r.e_.push_back(*a++);
        if (a == e_.end() || a->first != b->first || a->second < b->second) return std::nullopt;
        int k = a->second - b->second;
        if (k != 0) r.e_.emplace_back(a->first, k);
        ++a, ++b;
    }
    r.e_.insert(r.e_.end(), a, e_.end());
    return r;
}

Monomial Monomial::pow(int k) const {
    Monomial r;
    if (k == 0) return r;
    r.e_ = e_;
    for (auto& [g, e] : r.e_) e *= k;
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first < b->first)
            r.e_.push_back(*a++);
        else if (b->first < a->first)
            r.e_.push_back(*b++);
        else {
            r.e_.emplace_back(a->first, std::max(a->second, b->second));
            ++a, ++b;
        }
    }
    r.e_.insert(r.e_.end(), a, e_.end());
    r.e_.insert(r.e_.end(), b, o.e_.end());
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else {
            r.e_.emplace_back(a->first, std::min(a->second, b->second));
            ++a, ++b;
        }
    }
    return r;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
    // Leading terms first: higher total degree, then lexicographically larger.
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    auto& ea = a.exponents();
    auto& eb = b.exponents();
    size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first != eb[j].first) return ea[i].first < eb[j].first ? true : false;
        // same generator: larger exponent first
        if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
        ++i, ++j;
    }
    if (i < ea.size()) return true;  // a has an earlier extra generator
    return false;
}

// -------------------------------------------------------------------- Ring

GenId Ring::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

GenId Ring::require(const std::string& name) const {
    GenId g = find(name);
    if (g < 0) throw AlgebraError("ring '" + name_ + "' has no generator '" + name + "'");
    return g;
}

GenId Ring::add_gen(const std::string& name, const std::string& latex, bool invertible) {
    GenId g = static_cast<GenId>(gens_.size());
    gens_.push_back(GenDef{name, latex, invertible, {}});
    by_name_[name] = g;
    def_poly_.push_back(nullptr);
    dx_.push_back(nullptr);
    weights_.emplace_back(0, 0);
    if (invertible) inv_list_.push_back(g);
    return g;
}

void Ring::add_alias(const std::string& alias, GenId g) { by_name_[alias] = g; }

void Ring::set_def_poly(GenId g, const Poly& p) { def_poly_[g] = std::make_shared<Poly>(p); }

const Poly& Ring::def_poly(GenId g) const {
    if (!def_poly_[g]) throw AlgebraError("generator '" + gen_name(g) + "' is not materialized");
    return *def_poly_[g];
}

void Ring::set_dx_image(GenId g, const Poly& p) { dx_[g] = std::make_shared<Poly>(p); }

bool Ring::has_dx(GenId g) const { return dx_[g] != nullptr; }

const Poly& Ring::dx_image(GenId g) const {
    if (!dx_[g])
        throw AlgebraError("no x-derivative stored for generator '" + gen_name(g) +
                           "' in ring '" + name_ + "' (index headroom exceeded?)");
    return *dx_[g];
}

void Ring::set_weights(GenId g, Rational w1, Rational w2) {
    weights_[g] = {std::move(w1), std::move(w2)};
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Ring* r, const Rational& c) : ring_(r) {
    if (c != 0) terms_.emplace(Monomial::one(), c);
}

Poly Poly::gen(const Ring* r, GenId g, int k) {
    Poly p(r);
    p.terms_.emplace(Monomial::gen(g, k), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!ring_) ring_ = o.ring_;
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!ring_) ring_ = o.ring_;
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) const_cast<Rational&>(c) = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(ring_ ? ring_ : o.ring_);
    if (is_zero() || o.is_zero()) return r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw AlgebraError("Poly::pow negative exponent");
    Poly acc(ring_, Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::optional<Poly> Poly::exact_divide(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    Poly q(ring_);
    Poly r = *this;
    const auto& dl = *d.terms_.begin(); // leading term of divisor
    while (!r.is_zero()) {
        const auto& rl = *r.terms_.begin();
        auto m = rl.first.divide(dl.first);
        if (!m) return std::nullopt;
        Rational c = rl.second / dl.second;
        Poly t(ring_);
        t.terms_.emplace(*m, c);
        q += t;
        r -= t * d;
    }
    return q;
}

Poly Poly::partial(GenId g) const {
    Poly r(ring_);
    for (auto& [m, c] : terms_) {
        int e = m.exponent(g);
        if (e == 0) continue;
        Monomial n = m;
        n.set_exponent(g, e - 1);
        r.add_term(n, c * e);
    }
    return r;
}

Monomial Poly::monomial_content() const {
    Monomial g;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (first) {
            g = m;
            first = false;
        } else {
            g = g.gcd(m);
        }
        if (g.is_one()) break;
    }
    return g;
}

int Poly::degree_in(GenId g) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exponent(g));
    return d;
}

int Poly::min_degree_in(GenId g) const {
    int d = INT32_MAX;
    for (auto& [m, c] : terms_) d = std::min(d, m.exponent(g));
    return terms_.empty() ? 0 : d;
}

Poly Poly::coefficient_of(GenId g, int k) const {
    Poly r(ring_);
    for (auto& [m, c] : terms_) {
        if (m.exponent(g) != k) continue;
        Monomial n = m;
        n.set_exponent(g, 0);
        r.add_term(n, c);
    }
    return r;
}

// ------------------------------------------------------------- localization

Poly expand_invertible_monomial(const Ring* r, const Monomial& m) {
    Poly p(r, Rational(1));
    for (auto& [g, e] : m.exponents()) {
        if (e < 0) throw AlgebraError("negative exponent in denominator expansion");
        if (r->materialized(g))
            p = p * r->def_poly(g).pow(e);
        else
            p = p * Poly::gen(r, g, e);
    }
    return p;
}

std::optional<std::pair<Rational, Monomial>> factor_invertible(const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    const Ring* r = p.ring();
    Poly rest = p;
    Monomial m;
    // Peel materialized defining polynomials first.
    for (GenId g : r->invertible_gens()) {
        if (!r->materialized(g)) continue;
        const Poly& def = r->def_poly(g);
        while (rest.num_terms() > 1) {
            auto q = rest.exact_divide(def);
            if (!q) break;
            rest = *q;
            m.set_exponent(g, m.exponent(g) + 1);
        }
    }
    if (rest.num_terms() != 1) return std::nullopt;
    auto& [mono, c] = *rest.terms().begin();
    for (auto& [g, e] : mono.exponents())
        if (!r->invertible(g)) return std::nullopt;
    return std::make_pair(c, m * mono);
}

LocalizedExpr::LocalizedExpr(Poly p, Monomial den) : num_(std::move(p)), den_(std::move(den)) {
    for (auto& [g, e] : den_.exponents()) {
        if (e < 0) throw NonInvertibleDenominator("negative denominator exponent");
        if (!num_.ring()->invertible(g))
            throw NonInvertibleDenominator("generator '" + num_.ring()->gen_name(g) +
                                           "' is not invertible");
    }
    canonicalize();
}

LocalizedExpr LocalizedExpr::gen(const Ring* r, GenId g, int k) {
    if (k >= 0) return LocalizedExpr(Poly::gen(r, g, k));
    if (!r->invertible(g))
        throw NonInvertibleDenominator("generator '" + r->gen_name(g) + "' is not invertible");
    return LocalizedExpr(Poly(r, Rational(1)), Monomial::gen(g, -k));
}

void LocalizedExpr::canonicalize() {
    if (num_.is_zero()) {
        den_ = Monomial::one();
        return;
    }
    if (den_.is_one()) return;
    const Ring* r = num_.ring();
    Monomial newden;
    for (auto& [g, e] : den_.exponents()) {
        int rem = e;
        if (r->materialized(g)) {
            const Poly& def = r->def_poly(g);
            while (rem > 0) {
                auto q = num_.exact_divide(def);
                if (!q) break;
                num_ = std::move(*q);
                --rem;
            }
        } else {
            int k = num_.min_degree_in(g);
            int cancel = std::min(k, rem);
            if (cancel > 0) {
                Poly shifted(r);
                Monomial inv = Monomial::gen(g, cancel);
                for (auto& [m, c] : num_.terms()) shifted.add_term(*m.divide(inv), c);
                num_ = std::move(shifted);
                rem -= cancel;
            }
        }
        if (rem != 0) newden.set_exponent(g, rem);
    }
    den_ = newden;
}

Poly LocalizedExpr::den_poly() const { return expand_invertible_monomial(ring(), den_); }

LocalizedExpr LocalizedExpr::operator+(const LocalizedExpr& o) const {
    LocalizedExpr r = *this;
    r += o;
    return r;
}

LocalizedExpr& LocalizedExpr::operator+=(const LocalizedExpr& o) {
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (o.is_zero()) return *this;
    Monomial d = den_.lcm(o.den_);
    Poly a = num_ * expand_invertible_monomial(ring(), *d.divide(den_));
    Poly b = o.num_ * expand_invertible_monomial(ring(), *d.divide(o.den_));
    num_ = a + b;
    den_ = d;
    canonicalize();
    return *this;
}

LocalizedExpr LocalizedExpr::operator-(const LocalizedExpr& o) const { return *this + (-o); }

LocalizedExpr LocalizedExpr::operator-() const {
    LocalizedExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

LocalizedExpr LocalizedExpr::operator*(const LocalizedExpr& o) const {
    LocalizedExpr r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.canonicalize();
    return r;
}

LocalizedExpr LocalizedExpr::operator*(const Rational& c) const {
    LocalizedExpr r = *this;
    r.num_ = r.num_ * c;
    if (c == 0) r.den_ = Monomial::one();
    return r;
}

LocalizedExpr LocalizedExpr::inverse() const {
    auto f = factor_invertible(num_);
    if (!f) throw NonInvertibleDenominator("expression is not invertible in the localized ring");
    auto& [c, m] = *f;
    // 1 / (c * m / den) = den / (c * m)
    LocalizedExpr r;
    r.num_ = expand_invertible_monomial(ring(), den_) * (Rational(1) / c);
    r.den_ = m;
    r.canonicalize();
    return r;
}

LocalizedExpr LocalizedExpr::div(const LocalizedExpr& o) const {
    if (o.is_zero()) throw DivisionNotExact("division by zero");
    auto f = factor_invertible(o.num_);
    if (f) return *this * o.inverse();
    // fall back to exact polynomial division
    auto q = num_.exact_divide(o.num_);
    if (!q) throw DivisionNotExact("quotient is not exact and divisor is not invertible");
    LocalizedExpr r;
    r.num_ = *q * expand_invertible_monomial(ring(), o.den_);
    r.den_ = den_;
    r.canonicalize();
    return r;
}

LocalizedExpr LocalizedExpr::pow(int k) const {
    if (k == 0) return LocalizedExpr(ring(), Rational(1));
    LocalizedExpr base = k < 0 ? inverse() : *this;
    int n = k < 0 ? -k : k;
    LocalizedExpr acc(ring(), Rational(1));
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

LocalizedExpr LocalizedExpr::substitute(const Ring* target,
                                        const std::map<GenId, LocalizedExpr>& images) const {
    const Ring* src = ring();
    std::map<GenId, LocalizedExpr> img = images;
    auto image_of = [&](GenId g) -> const LocalizedExpr& {
        auto it = img.find(g);
        if (it != img.end()) return it->second;
        GenId tg = target->find(src->gen_name(g));
        if (tg < 0)
            throw AlgebraError("substitute: no image for generator '" + src->gen_name(g) + "'");
        auto [jt, _] = img.emplace(g, LocalizedExpr::gen(target, tg));
        return jt->second;
    };
    std::map<std::pair<GenId, int>, LocalizedExpr> powcache;
    auto power_of = [&](GenId g, int e) -> const LocalizedExpr& {
        auto key = std::make_pair(g, e);
        auto it = powcache.find(key);
        if (it == powcache.end()) it = powcache.emplace(key, image_of(g).pow(e)).first;
        return it->second;
    };
    LocalizedExpr out(target);
    for (auto& [m, c] : num_.terms()) {
        LocalizedExpr t(target, c);
        for (auto& [g, e] : m.exponents()) t = t * power_of(g, e);
        out += t;
    }
    for (auto& [g, e] : den_.exponents()) out = out * image_of(g).pow(-e);
    return out;
}

LocalizedExpr LocalizedExpr::dx() const {
    const Ring* r = ring();
    // d(N/m) = dN/m - sum_g e_g dP_g * N / (m * g)
    Poly dnum(r);
    for (auto& [m, c] : num_.terms()) {
        for (auto& [g, e] : m.exponents()) {
            Monomial n = m;
            n.set_exponent(g, e - 1);
            Poly t(r);
            t.add_term(n, c * e);
            dnum += t * r->dx_image(g);
        }
    }
    LocalizedExpr out(dnum, den_);
    for (auto& [g, e] : den_.exponents()) {
        Poly dp = r->materialized(g) ? [&] {
            Poly acc(r);
            const Poly& def = r->def_poly(g);
            for (auto& [m, c] : def.terms())
                for (auto& [h, k] : m.exponents()) {
                    Monomial n = m;
                    n.set_exponent(h, k - 1);
                    Poly t(r);
                    t.add_term(n, c * k);
                    acc += t * r->dx_image(h);
                }
            return acc;
        }()
                                     : r->dx_image(g);
        Monomial d2 = den_;
        d2.set_exponent(g, e + 1);
        out += LocalizedExpr(-(num_ * dp) * Rational(e), d2);
    }
    return out;
}

LocalizedExpr LocalizedExpr::partial(GenId g) const {
    const Ring* r = ring();
    LocalizedExpr out(num_.partial(g), den_);
    for (auto& [h, e] : den_.exponents()) {
        Poly dp = r->materialized(h) ? r->def_poly(h).partial(g)
                                     : (h == g ? Poly(r, Rational(1)) : Poly(r));
        if (dp.is_zero()) continue;
        Monomial d2 = den_;
        d2.set_exponent(h, e + 1);
        out += LocalizedExpr(-(num_ * dp) * Rational(e), d2);
    }
    return out;
}

LocalizedExpr LocalizedExpr::euler(int which) const {
    const Ring* r = ring();
    if (!r->has_weights()) throw AlgebraError("ring has no Euler weights");
    auto wt = [&](GenId g) { return which == 1 ? r->weight1(g) : r->weight2(g); };
    // Every generator (materialized ones included) is weight-homogeneous, so
    // E acts term-by-term: weight(numerator monomial) - weight(denominator).
    Rational wden(0);
    for (auto& [g, e] : den_.exponents()) wden += wt(g) * e;
    LocalizedExpr out(r);
    for (auto& [m, c] : num_.terms()) {
        Rational w(0);
        for (auto& [g, e] : m.exponents()) w += wt(g) * e;
        Poly t(r);
        t.add_term(m, c * (w - wden));
        out += LocalizedExpr(t, den_);
    }
    return out;
}

} // namespace bkdv
