#pragma once

#include <cstdint>
#include <vector>

#include "nonsimple/heights.hpp"

namespace nonsimple {

/// Default cap on the module size |(Z/l^m)^{2g}| for exhaustive enumeration.
inline constexpr unsigned long kEnumerationBound = 4096;

/// (Z/l^m)^{2g} with the standard alternating pairing
/// <u, v> = sum_i (u_i v_{g+i} - u_{g+i} v_i) mod l^m.
class SympModule {
  public:
    using Vec = std::vector<uint32_t>;

    SympModule(unsigned g, unsigned long ell, unsigned m);

    unsigned g() const { return g_; }
    unsigned long ell() const { return ell_; }
    unsigned m() const { return m_; }
    unsigned dim() const { return 2 * g_; }
    unsigned long modulus() const { return q_; } // l^m
    unsigned long size() const { return size_; } // l^{2gm}

    /// <u, v> in Z/l^m.
    unsigned long pairing(const Vec& u, const Vec& v) const;

    /// Pairing on l^j-torsion vectors, valued in Z/l^j: divide u, v by
    /// l^{m-j} and pair. Independent of the preimage choice.
    unsigned long torsion_pairing(const Vec& u, const Vec& v, unsigned j) const;

    /// torsion_pairing with j = 1, the induced pairing on the l-torsion.
    unsigned long induced_mod_ell_pairing(const Vec& u, const Vec& v) const;

    Vec decode(unsigned long index) const;
    unsigned long encode(const Vec& v) const;
    Vec add(const Vec& u, const Vec& v) const;
    Vec scalar_mul(unsigned long c, const Vec& v) const;
    bool is_torsion(const Vec& v, unsigned j) const; // l^j v = 0

  private:
    unsigned g_;
    unsigned long ell_;
    unsigned m_;
    unsigned long q_;
    unsigned long size_;
};

/// Subgroup of a SympModule in canonical form. gens is the Howell normal
/// form over Z/l^m (unique per subgroup); elements lists every member index
/// in increasing order.
struct Subgroup {
    std::vector<std::vector<uint32_t>> gens;
    Int order;
    std::vector<uint32_t> elements;
};

/// Howell normal form of the row span of mat over Z/modulus; rows of the
/// result are a canonical generating set (equal spans give equal forms).
std::vector<std::vector<uint32_t>> howell_form(std::vector<std::vector<uint32_t>> mat,
                                               unsigned long modulus);

/// All subgroups of order l^{mg} on which the pairing vanishes identically,
/// deduplicated and deterministically ordered.
std::vector<Subgroup> enumerate_maximal_isotropic(const SympModule& M,
                                                  unsigned long bound = kEnumerationBound);

/// Additive model of e_{st}(u,v)^t = e_s(tu, tv) for s t = l^m: checks
/// t<u,v> = t * (s-torsion pairing of tu, tv) in Z/l^m, exhaustively when
/// size^2 is small, sampled otherwise.
bool verify_scaling_identity(const SympModule& M, unsigned long s, unsigned long t);

struct KernelDichotomyReport {
    unsigned long lagrangians = 0;
    unsigned long full_torsion_branch = 0; // W = M[l^{m/2}]
    unsigned long isotropic_branch = 0;    // l^{k-1} W nonzero and isotropic mod l
    unsigned long violations = 0;
};

/// For every maximal isotropic W with k minimal such that l^k W = 0, checks
/// that either k = m/2 and W is the full l^k-torsion, or l^{k-1} W is a
/// nonzero subgroup of the l-torsion on which the induced pairing vanishes.
KernelDichotomyReport verify_kernel_dichotomy(const SympModule& M,
                                      unsigned long bound = kEnumerationBound);

/// |Sp_{2g}(F_ell)| = ell^{g^2} prod_{i=1}^{g} (ell^{2i} - 1).
Int sp_order(unsigned g, unsigned long ell);

/// Number of isotropic k-dimensional subspaces of F_ell^{2g}:
/// gaussian_binomial(g, k) * prod_{i=g-k+1}^{g} (ell^i + 1), 1 <= k <= g.
Int isotropic_count(unsigned g, unsigned long ell, unsigned k);

/// Index of Sp_{2gB} x Sp_{2gC} inside Sp_{2g}, gC = g - gB, exact.
Int block_diag_index(unsigned g, unsigned gB, unsigned long ell);

} // namespace nonsimple
