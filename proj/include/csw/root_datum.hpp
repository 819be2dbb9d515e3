#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csw/lattice_algebra.hpp"
#include "csw/linalg.hpp"

namespace csw {

/// How the (co)character lattice of a catalog datum is chosen.
struct LatticeChoice {
    enum Kind { Adjoint, SimplyConnected, Explicit } kind = Adjoint;
    // For Explicit: basis rows of X_* in coweight coordinates (n x n,
    // integer, containing the coroot lattice).
    std::vector<CoordVec> basis;
};

struct CartanSpec {
    std::string type;  // "A1".."A4", "B2".."B4", "C2".."C4", "D3","D4",
                       // "G2", "BC1", "BC2"
    LatticeChoice lattice;
    std::map<std::size_t, Coord> mult;  // positive-root index -> d_alpha
    std::size_t torus_rank = 0;         // extra central ZZ^k factor
};

struct WeylElement {
    std::vector<CoordVec> matrix;  // action on X_*(A) coordinates
    std::vector<std::size_t> word;  // one reduced word in simple generators
    std::size_t length = 0;
    int sign = 1;  // (-1)^length
};

class RootDatum;

class WeylGroup {
public:
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& identity() const { return elements_[0]; }

    LatticePoint act(std::size_t idx, const LatticePoint& p) const;

private:
    friend class RootDatum;
    std::vector<WeylElement> elements_;
};

/// The root datum of the dual group: lattices 𝒳 = X_*(A)+Λ∨ and
/// 𝒴 = Hom(𝒳, Z), roots (Φ^nd)∨ in 𝒳-coords, coroots Φ^nd in 𝒴-coords.
struct DualGroupDatum {
    std::string tag;            // lattice tag for 𝒳-based group algebras
    RatMat x_basis;             // rows: basis of 𝒳 inside X_*(A) ⊗ Q
    LatticeMap inc;             // X_*(A) -> 𝒳 coords
    std::vector<CoordVec> positive_roots;   // (Φ^nd,+)∨ in 𝒳-coords
    std::vector<CoordVec> positive_coroots; // Φ^nd,+ in 𝒴-coords
    std::vector<std::size_t> simple_indices;
    LatticePoint rho_vee;       // in 𝒳-coords
    // Simple reflection matrices acting on 𝒳-coords.
    std::vector<std::vector<CoordVec>> simple_reflections;
    // Full Weyl group in 𝒳-coords (same abstract group as the base datum).
    std::shared_ptr<WeylGroup> weyl;
    // W-invariant symmetric bilinear form on 𝒳-coords (averaged dot).
    RatMat invariant_form;

    std::size_t rank() const { return x_basis.size(); }

    Coord pairing(std::size_t coroot_idx, const LatticePoint& x) const;
    bool dominant(const LatticePoint& x) const;
    bool strictly_dominant(const LatticePoint& x) const;
    Rational form(const RatVec& a, const RatVec& b) const;
    RatVec to_rational(const LatticePoint& x) const;  // into X_*(A) ⊗ Q

    /// Straighten alt(e^xi): returns {sign, strictly dominant translate} or
    /// nullopt when xi is fixed by a reflection (alt vanishes).
    std::optional<std::pair<int, LatticePoint>> straighten(
        const LatticePoint& xi) const;
};

struct IsogenyDecomposition {
    const RootDatum* source = nullptr;           // G'
    std::shared_ptr<RootDatum> adjoint;          // G = G'/Z
    std::size_t torus_rank = 0;                  // rank of T = G'/DG'
    LatticeMap pi_star;  // X_*(A') -> X_*(A) ⊕ X_*(T)
};

class RootDatum {
public:
    static RootDatum build(const CartanSpec& spec);
    /// Named catalog entries, e.g. "A1-adjoint", "A2-sc", "BC1", "G2-adjoint".
    static RootDatum catalog(const std::string& name);
    static CartanSpec catalog_spec(const std::string& name);
    static std::vector<std::string> catalog_names();

    const std::string& tag() const { return tag_; }
    std::size_t rank() const { return rank_; }              // rank of X_*(A)
    std::size_t semisimple_rank() const { return simple_.size(); }
    bool nonreduced() const { return nonreduced_; }

    // Positive roots in X^*(A)-coords with aligned coroots in X_*(A)-coords.
    const std::vector<CoordVec>& positive_roots() const { return pos_roots_; }
    const std::vector<CoordVec>& positive_coroots() const {
        return pos_coroots_;
    }
    const std::vector<std::size_t>& simple_indices() const { return simple_; }
    const CoordVec& simple_root(std::size_t i) const {
        return pos_roots_[simple_[i]];
    }
    const CoordVec& simple_coroot(std::size_t i) const {
        return pos_coroots_[simple_[i]];
    }
    Coord mult(std::size_t pos_root_idx) const { return mult_[pos_root_idx]; }

    const WeylGroup& weyl() const { return *weyl_; }
    std::shared_ptr<WeylGroup> weyl_ptr() const { return weyl_; }

    static Coord pairing(const CoordVec& chi, const LatticePoint& lam);

    bool dominant(const LatticePoint& lam) const;
    bool strictly_dominant(const LatticePoint& lam) const;

    LatticePoint reflect(std::size_t simple_idx, const LatticePoint& lam) const;

    /// {sign, dominant-chamber translate}; nullopt when fixed by a
    /// reflection (pairs to 0 with some simple root).
    std::optional<std::pair<int, LatticePoint>> straighten(
        const LatticePoint& lam) const;

    /// Z-basis (rows) of the coweight lattice Λ∨ inside span(Φ∨) ⊗ Q.
    const RatMat& coweight_lattice() const { return coweight_basis_; }

    /// rho∨ of Φ^nd as a rational vector in X_*(A) ⊗ Q (may be outside
    /// X_*(A)); integral coordinates when it lies in the lattice.
    const RatVec& rho_vee_rational() const { return rho_vee_q_; }
    std::optional<LatticePoint> rho_vee_in_lattice() const;

    const DualGroupDatum& dual_datum() const;

    IsogenyDecomposition isogeny_decomposition() const;

    GroupAlgebraElement monomial(const LatticePoint& p,
                                 LaurentScalar c = LaurentScalar::one()) const {
        return GroupAlgebraElement::monomial(tag_, p, std::move(c));
    }

    GroupAlgebraElement weyl_act(std::size_t w_idx,
                                 const GroupAlgebraElement& a) const;
    GroupAlgebraElement alt(const GroupAlgebraElement& a) const;
    bool is_symmetric(const GroupAlgebraElement& a) const;
    bool is_alternating(const GroupAlgebraElement& a) const;

    /// Indices of positive non-divisible roots.
    const std::vector<std::size_t>& nd_positive() const { return nd_pos_; }

private:
    void validate() const;
    void build_weyl();
    void compute_coweight_lattice();
    void build_dual() const;

    std::string tag_;
    std::size_t rank_ = 0;
    bool nonreduced_ = false;
    std::vector<CoordVec> pos_roots_;    // X^*(A) coords
    std::vector<CoordVec> pos_coroots_;  // X_*(A) coords
    std::vector<std::size_t> simple_;    // indices into pos_roots_
    std::vector<Coord> mult_;
    std::vector<std::size_t> nd_pos_;
    std::shared_ptr<WeylGroup> weyl_;
    RatMat coweight_basis_;
    RatVec rho_vee_q_;
    mutable std::shared_ptr<DualGroupDatum> dual_;
};

}  // namespace csw
