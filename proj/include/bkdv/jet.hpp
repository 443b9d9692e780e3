#pragma once

#include <vector>

#include "bkdv/ring.hpp"

namespace bkdv {

using JetExpr = LocalizedExpr;

// Jet index headroom. Rings are fixed at construction; operations that would
// need a higher index throw.
constexpr int kMaxJet = 16;
constexpr int kMaxFlowJet = 26;

// Jet variables v_k, r_k with u1 = v1 + r*r1 materialized; denominators in
// {r, v1, u1}. Generator names "v0","r0","v1",... with aliases "v", "r".
const Ring* vjet_ring();
// Jet variables u_k, r_k with v1 = u1 - r*r1 materialized; denominators in
// {r, u1, v1}.
const Ring* ujet_ring();
// Flow variables w_k, rho_k plus the formal generator "eps"; no localization.
const Ring* flow_ring();

GenId v_gen(int k);
GenId r_gen(int k); // in the v-jet ring
GenId u_gen(int k); // in the u-jet ring
GenId ur_gen(int k);
GenId w_gen(int k);
GenId rho_gen(int k);
GenId eps_gen();

JetExpr jet_one(const Ring* r);

Poly poly_dx(const Poly& p);
JetExpr dxn(const JetExpr& e, int n);

// d^k(r^2/2) as a polynomial in the r-jets of `ring` (v-jet or u-jet ring).
Poly dk_r2_half(const Ring* ring, int k);

// u_k as a v-jet polynomial (u_k = v_k + d^k(r^2/2)) and vice versa.
Poly u_in_vjets(int k);
Poly v_in_ujets(int k);

JetExpr to_u_coords(const JetExpr& e);   // v-jet ring -> u-jet ring
JetExpr from_u_coords(const JetExpr& e); // u-jet ring -> v-jet ring

// Specialization r_k -> 0 for every k (closed-sector limit). Throws
// ClosedPartContaminated when the r-denominator does not cancel.
JetExpr set_r_jets_zero(const JetExpr& e);

// Log-bearing expression: sum c_i log(arg_i) + rest. Used for F^c_1, F^o_1
// and X_0, whose gradients are honest localized expressions.
struct LogExpr {
    std::vector<std::pair<Rational, JetExpr>> logs;
    JetExpr rest;

    explicit LogExpr(const Ring* r) : rest(r) {}
    JetExpr partial(GenId g) const;
    JetExpr dx() const;
};

} // namespace bkdv
