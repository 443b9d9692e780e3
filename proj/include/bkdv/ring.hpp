#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bkdv/errors.hpp"
#include "bkdv/rational.hpp"

namespace bkdv {

using GenId = int;

class Ring;
class Poly;

// Sparse exponent vector, sorted by generator id, zero exponents never stored.
class Monomial {
  public:
    Monomial() = default;
    static Monomial one() { return {}; }
    static Monomial gen(GenId g, int k = 1);

    bool is_one() const { return e_.empty(); }
    int degree() const;
    int exponent(GenId g) const;
    const std::vector<std::pair<GenId, int>>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    // Componentwise quotient; nullopt if any exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const;
    Monomial pow(int k) const;
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    void set_exponent(GenId g, int k); // k may be 0 (erases)

  private:
    std::vector<std::pair<GenId, int>> e_;
};

// Degree-lexicographic order, leading (largest) term first in map iteration.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct GenDef {
    std::string name;
    std::string latex;
    bool invertible = false;
    // Non-empty for "materialized" invertible generators (u1 = v1 + r*r1,
    // U1 = 1 - I1, ...). Such generators never appear in numerators; the
    // defining polynomial is used when expanding them there.
    std::vector<std::pair<std::string, Rational>> def_terms; // textual, resolved lazily
};

// Generator registry plus the structure maps (x-derivation images, Euler
// weights) that the jet rings carry. Rings are built once and never mutated,
// so raw const pointers to them can be shared freely across threads.
class Ring {
  public:
    explicit Ring(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(gens_.size()); }
    const std::string& gen_name(GenId g) const { return gens_[g].name; }
    const std::string& gen_latex(GenId g) const { return gens_[g].latex; }
    bool invertible(GenId g) const { return gens_[g].invertible; }
    bool materialized(GenId g) const { return !def_poly_.empty() && def_poly_[g] != nullptr; }
    const Poly& def_poly(GenId g) const;

    GenId find(const std::string& name) const; // -1 if absent
    GenId require(const std::string& name) const;

    GenId add_gen(const std::string& name, const std::string& latex, bool invertible = false);
    void set_def_poly(GenId g, const Poly& p);
    void add_alias(const std::string& alias, GenId g);

    // x-derivation image of a base generator (throws if the ring has none).
    const Poly& dx_image(GenId g) const;
    void set_dx_image(GenId g, const Poly& p);
    bool has_dx(GenId g) const;

    // Euler weights (E1, E2) for jet rings.
    void set_weights(GenId g, Rational w1, Rational w2);
    Rational weight1(GenId g) const { return weights_[g].first; }
    Rational weight2(GenId g) const { return weights_[g].second; }
    bool has_weights() const { return !weights_.empty(); }

    const std::vector<GenId>& invertible_gens() const { return inv_list_; }

    // Jet bookkeeping: family (0 = v/w/u-type, 1 = r/rho-type) and index.
    void set_jet_info(GenId g, int family, int index);
    std::pair<int, int> jet_info(GenId g) const; // {-1,-1} for non-jets
    GenId jet_gen(int family, int index) const;  // -1 if out of range

  private:
    std::string name_;
    std::vector<GenDef> gens_;
    std::map<std::string, GenId> by_name_;
    std::vector<std::shared_ptr<Poly>> def_poly_;
    std::vector<std::shared_ptr<Poly>> dx_;
    std::vector<std::pair<Rational, Rational>> weights_;
    std::vector<GenId> inv_list_;
    std::vector<std::pair<int, int>> jet_info_;
    std::vector<std::vector<GenId>> jet_by_family_;
};

// Sparse multivariate polynomial over the rationals.
class Poly {
  public:
    Poly() : ring_(nullptr) {}
    explicit Poly(const Ring* r) : ring_(r) {}
    Poly(const Ring* r, const Rational& c);
    static Poly gen(const Ring* r, GenId g, int k = 1);

    const Ring* ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int num_terms() const { return static_cast<int>(terms_.size()); }
    int total_degree() const;
    const std::map<Monomial, Rational, MonoLess>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int k) const;
    // Exact division; nullopt when the remainder is nonzero.
    std::optional<Poly> exact_divide(const Poly& d) const;
    Poly partial(GenId g) const;
    // Largest monomial dividing every term (one() for zero poly).
    Monomial monomial_content() const;
    int degree_in(GenId g) const;
    int min_degree_in(GenId g) const;
    // Coefficient of g^k, a polynomial in the remaining generators.
    Poly coefficient_of(GenId g, int k) const;

  private:
    const Ring* ring_;
    std::map<Monomial, Rational, MonoLess> terms_;
};

// Numerator polynomial over a monomial denominator drawn from the ring's
// invertible generator set. Canonical: common factors cancelled, numerators
// free of materialized generators.
class LocalizedExpr {
  public:
    LocalizedExpr() = default;
    explicit LocalizedExpr(const Ring* r) : num_(r) {}
    LocalizedExpr(const Ring* r, const Rational& c) : num_(r, c) {}
    explicit LocalizedExpr(Poly p) : num_(std::move(p)) { canonicalize(); }
    LocalizedExpr(Poly p, Monomial den);
    static LocalizedExpr gen(const Ring* r, GenId g, int k = 1);

    const Ring* ring() const { return num_.ring(); }
    const Poly& num() const { return num_; }
    const Monomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    LocalizedExpr operator+(const LocalizedExpr& o) const;
    LocalizedExpr operator-(const LocalizedExpr& o) const;
    LocalizedExpr operator-() const;
    LocalizedExpr operator*(const LocalizedExpr& o) const;
    LocalizedExpr operator*(const Rational& c) const;
    LocalizedExpr& operator+=(const LocalizedExpr& o);
    bool operator==(const LocalizedExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const LocalizedExpr& o) const { return !(*this == o); }

    // Division. The divisor must reduce to scalar * (product of invertible
    // generators / monomial); otherwise falls back to exact polynomial
    // division of the numerators. Throws DivisionNotExact on failure.
    LocalizedExpr div(const LocalizedExpr& o) const;
    LocalizedExpr pow(int k) const; // negative k needs invertible form
    LocalizedExpr inverse() const;

    // Substitution; images live in `target`. Generators without an image map
    // to the target generator of the same name.
    LocalizedExpr substitute(const Ring* target, const std::map<GenId, LocalizedExpr>& images) const;

    LocalizedExpr dx() const;           // ring's x-derivation
    LocalizedExpr partial(GenId g) const;
    LocalizedExpr euler(int which) const; // 1 or 2, jet rings only

    // den expanded into an actual polynomial (materialized gens expanded).
    Poly den_poly() const;

  private:
    void canonicalize();
    Poly num_;
    Monomial den_; // only invertible gens, exponents > 0
};

// Expands a monomial over invertible generators into a genuine polynomial.
Poly expand_invertible_monomial(const Ring* r, const Monomial& m);

// Tries to write p as c * m with m a monomial over invertible generators
// (materialized defining polynomials are factored out as well).
std::optional<std::pair<Rational, Monomial>> factor_invertible(const Poly& p);

} // namespace bkdv
