#include "csw/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace csw {

namespace {

// cartan[i][j] = <alpha_j, alpha_i^vee>
std::vector<std::vector<Coord>> cartan_matrix(const std::string& type,
                                              std::size_t n) {
    std::vector<std::vector<Coord>> a(n, std::vector<Coord>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    char fam = type[0];
    auto chain = [&](std::size_t upto) {
        for (std::size_t i = 0; i + 1 < upto; ++i) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    switch (fam) {
        case 'A':
            chain(n);
            break;
        case 'B':  // alpha_{n-1} short
            if (n < 2) throw std::invalid_argument("B needs rank >= 2");
            chain(n);
            a[n - 1][n - 2] = -2;
            break;
        case 'C':  // alpha_{n-1} long
            if (n < 2) throw std::invalid_argument("C needs rank >= 2");
            chain(n);
            a[n - 2][n - 1] = -2;
            break;
        case 'D':
            if (n < 3) throw std::invalid_argument("D needs rank >= 3");
            chain(n - 1);
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            break;
        case 'G':  // alpha_0 short, alpha_1 long
            a[0][1] = -3;
            a[1][0] = -1;
            break;
        default:
            throw std::invalid_argument("unknown Cartan family: " + type);
    }
    return a;
}

struct RootPair {
    CoordVec root;    // X^* coords
    CoordVec coroot;  // X_* coords
    bool operator<(const RootPair& o) const { return root < o.root; }
};

Coord dot(const CoordVec& a, const CoordVec& b) {
    Coord s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

CoordVec sub_scaled(const CoordVec& a, Coord f, const CoordVec& b) {
    CoordVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - f * b[i];
    return r;
}

// Closure of the simple pairs under simple reflections (reduced systems).
std::set<RootPair> generate_roots(const std::vector<RootPair>& simple) {
    std::set<RootPair> all;
    std::deque<RootPair> work;
    for (const auto& p : simple) {
        if (all.insert(p).second) work.push_back(p);
        RootPair m{lattice_neg(p.root), lattice_neg(p.coroot)};
        if (all.insert(m).second) work.push_back(m);
    }
    while (!work.empty()) {
        RootPair p = work.front();
        work.pop_front();
        for (const auto& s : simple) {
            Coord c1 = dot(p.root, s.coroot);
            Coord c2 = dot(s.root, p.coroot);
            RootPair q{sub_scaled(p.root, c1, s.root),
                       sub_scaled(p.coroot, c2, s.coroot)};
            if (all.insert(q).second) work.push_back(q);
        }
        if (all.size() > 4096)
            throw std::invalid_argument("root system closure does not stay "
                                        "finite (bad explicit data?)");
    }
    return all;
}

CoordVec pad(CoordVec v, std::size_t extra) {
    v.resize(v.size() + extra, 0);
    return v;
}

}  // namespace

LatticePoint WeylGroup::act(std::size_t idx, const LatticePoint& p) const {
    const auto& m = elements_[idx].matrix;
    LatticePoint out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) out[i] += m[i][j] * p[j];
    return out;
}

Coord RootDatum::pairing(const CoordVec& chi, const LatticePoint& lam) {
    return dot(chi, lam);
}

RootDatum RootDatum::build(const CartanSpec& spec) {
    const std::string& t = spec.type;
    bool bc = t.size() > 2 && t[0] == 'B' && t[1] == 'C';
    std::size_t n = std::stoul(bc ? t.substr(2) : t.substr(1));
    if (n == 0 || n > 4)
        throw std::invalid_argument("catalog supports rank 1..4: " + t);
    if (bc && n > 2)
        throw std::invalid_argument("non-reduced catalog supports BC1, BC2");
    if (t[0] == 'G' && n != 2) throw std::invalid_argument("G2 only");

    std::vector<RootPair> simple_pairs;
    std::set<RootPair> all;

    if (bc) {
        if (spec.lattice.kind != LatticeChoice::Adjoint)
            throw std::invalid_argument(
                "BC types ship a single lattice (X_* = Z^n); use the "
                "default lattice choice");
        // Standard coordinates, X_* = Z^n.
        auto e = [&](std::size_t i, Coord c) {
            CoordVec v(n, 0);
            v[i] = c;
            return v;
        };
        std::vector<RootPair> pos;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                CoordVec d(n, 0), s(n, 0);
                d[i] = 1;
                d[j] = -1;
                s[i] = 1;
                s[j] = 1;
                pos.push_back({d, d});
                pos.push_back({s, s});
            }
        for (std::size_t i = 0; i < n; ++i) {
            pos.push_back({e(i, 1), e(i, 2)});
            pos.push_back({e(i, 2), e(i, 1)});
        }
        for (const auto& p : pos) {
            all.insert(p);
            all.insert({lattice_neg(p.root), lattice_neg(p.coroot)});
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            CoordVec d(n, 0);
            d[i] = 1;
            d[i + 1] = -1;
            simple_pairs.push_back({d, d});
        }
        simple_pairs.push_back({e(n - 1, 1), e(n - 1, 2)});
    } else {
        auto cm = cartan_matrix(t, n);
        for (std::size_t j = 0; j < n; ++j) {
            CoordVec root(n, 0), coroot(n, 0);
            switch (spec.lattice.kind) {
                case LatticeChoice::SimplyConnected:
                    coroot[j] = 1;
                    for (std::size_t i = 0; i < n; ++i) root[i] = cm[i][j];
                    break;
                case LatticeChoice::Adjoint:
                    root[j] = 1;
                    for (std::size_t i = 0; i < n; ++i) coroot[i] = cm[j][i];
                    break;
                case LatticeChoice::Explicit: {
                    const auto& L = spec.lattice.basis;
                    if (L.size() != n)
                        throw std::invalid_argument(
                            "explicit basis must have one row per simple "
                            "root");
                    // Coroot in adjoint (coweight) coords is row j of the
                    // Cartan matrix; solve L^T x = coroot.
                    RatMat lt(n, RatVec(n));
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t k = 0; k < n; ++k)
                            lt[i][k] = Rational(static_cast<long>(L[k][i]));
                    RatVec rhs(n);
                    for (std::size_t i = 0; i < n; ++i)
                        rhs[i] = Rational(static_cast<long>(cm[j][i]));
                    auto sol = rat_solve(lt, rhs);
                    if (!sol)
                        throw std::invalid_argument("explicit basis singular");
                    for (std::size_t i = 0; i < n; ++i) {
                        if (!is_integral((*sol)[i]))
                            throw std::invalid_argument(
                                "explicit lattice does not contain the "
                                "coroot lattice");
                        coroot[i] = (*sol)[i].get_num().get_si();
                    }
                    for (std::size_t i = 0; i < n; ++i) root[i] = L[i][j];
                    break;
                }
            }
            simple_pairs.push_back({root, coroot});
        }
        all = generate_roots(simple_pairs);
    }

    RootDatum d;
    d.nonreduced_ = bc;
    d.rank_ = n + spec.torus_rank;
    d.tag_ = t + (spec.lattice.kind == LatticeChoice::SimplyConnected
                      ? "-sc"
                      : (spec.lattice.kind == LatticeChoice::Explicit
                             ? "-explicit"
                             : (bc ? "" : "-adjoint")));
    if (spec.torus_rank)
        d.tag_ += "-t" + std::to_string(spec.torus_rank);

    // Positivity: nonnegative coordinates in the simple-root basis.
    RatMat srm(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            srm[i][k] = Rational(static_cast<long>(simple_pairs[k].root[i]));
    std::vector<RootPair> positives;
    for (const auto& p : all) {
        RatVec rhs(n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = Rational(static_cast<long>(p.root[i]));
        auto c = rat_solve(srm, rhs);
        if (!c) throw std::logic_error("root outside simple-root span");
        bool pos = true, neg = true;
        for (const auto& x : *c) {
            if (x < 0) pos = false;
            if (x > 0) neg = false;
        }
        if (pos == neg) throw std::logic_error("indefinite root sign");
        if (pos) positives.push_back(p);
    }

    // Deterministic order: simple roots first, the rest lex.
    std::vector<RootPair> ordered;
    for (const auto& s : simple_pairs) ordered.push_back(s);
    std::vector<RootPair> rest;
    for (const auto& p : positives)
        if (std::find_if(simple_pairs.begin(), simple_pairs.end(),
                         [&](const RootPair& s) { return s.root == p.root; }) ==
            simple_pairs.end())
            rest.push_back(p);
    std::sort(rest.begin(), rest.end());
    ordered.insert(ordered.end(), rest.begin(), rest.end());

    for (std::size_t i = 0; i < ordered.size(); ++i) {
        d.pos_roots_.push_back(pad(ordered[i].root, spec.torus_rank));
        d.pos_coroots_.push_back(pad(ordered[i].coroot, spec.torus_rank));
        if (i < n) d.simple_.push_back(i);
    }

    // Non-divisible positive roots.
    std::set<CoordVec> root_set;
    for (const auto& p : all) root_set.insert(p.root);
    for (std::size_t i = 0; i < d.pos_roots_.size(); ++i) {
        CoordVec base(ordered[i].root);
        bool divisible = true;
        CoordVec half(base.size());
        for (std::size_t k = 0; k < base.size(); ++k) {
            if (base[k] % 2 != 0) divisible = false;
            half[k] = base[k] / 2;
        }
        if (divisible && !root_set.count(half)) divisible = false;
        if (!divisible) d.nd_pos_.push_back(i);
    }

    d.build_weyl();
    d.compute_coweight_lattice();

    // rho∨ = half the sum of the positive non-divisible coroots.
    d.rho_vee_q_.assign(d.rank_, Rational(0));
    for (auto i : d.nd_pos_)
        for (std::size_t k = 0; k < d.rank_; ++k)
            d.rho_vee_q_[k] += make_rational(
                Integer(static_cast<long>(d.pos_coroots_[i][k])), Integer(2));

    // Multiplicities: default 1, overrides propagated over W-orbits.
    d.mult_.assign(d.pos_roots_.size(), 1);
    for (const auto& [idx, val] : spec.mult) {
        if (idx >= d.mult_.size())
            throw std::invalid_argument("mult index out of range");
        if (val <= 0) throw std::invalid_argument("mult must be positive");
        d.mult_[idx] = val;
    }
    // Orbit partition of positive roots (w(root) up to sign).
    {
        auto pos_index = [&](const CoordVec& r) -> std::size_t {
            for (std::size_t i = 0; i < d.pos_roots_.size(); ++i)
                if (d.pos_roots_[i] == r || lattice_neg(d.pos_roots_[i]) == r)
                    return i;
            throw std::logic_error("root orbit left the system");
        };
        std::vector<std::size_t> parent(d.pos_roots_.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
        std::function<std::size_t(std::size_t)> find =
            [&](std::size_t x) -> std::size_t {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (std::size_t i = 0; i < d.pos_roots_.size(); ++i)
            for (std::size_t s = 0; s < n; ++s) {
                Coord c = dot(d.pos_roots_[i], d.simple_coroot(s));
                CoordVec img = sub_scaled(d.pos_roots_[i], c, d.simple_root(s));
                parent[find(pos_index(img))] = find(i);
            }
        // Propagate overrides across orbits and check consistency.
        std::map<std::size_t, Coord> orbit_val;
        for (const auto& [idx, val] : spec.mult) {
            auto r = find(idx);
            auto it = orbit_val.find(r);
            if (it != orbit_val.end() && it->second != val)
                throw std::invalid_argument(
                    "mult overrides conflict on a W-orbit");
            orbit_val[r] = val;
        }
        for (std::size_t i = 0; i < d.mult_.size(); ++i) {
            auto it = orbit_val.find(find(i));
            if (it != orbit_val.end()) d.mult_[i] = it->second;
        }
    }

    d.validate();
    return d;
}

void RootDatum::validate() const {
    for (std::size_t i = 0; i < pos_roots_.size(); ++i)
        if (dot(pos_roots_[i], pos_coroots_[i]) != 2)
            throw std::logic_error("<alpha, alpha^vee> != 2");
    // Simple reflections permute the roots.
    std::set<CoordVec> roots;
    for (const auto& r : pos_roots_) {
        roots.insert(r);
        roots.insert(lattice_neg(r));
    }
    for (auto s : simple_)
        for (const auto& r : roots) {
            Coord c = dot(r, pos_coroots_[s]);
            if (!roots.count(sub_scaled(r, c, pos_roots_[s])))
                throw std::logic_error("reflection does not permute roots");
        }
}

void RootDatum::build_weyl() {
    weyl_ = std::make_shared<WeylGroup>();
    std::size_t n = simple_.size(), m = rank_;
    std::vector<std::vector<CoordVec>> gens;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<CoordVec> mat(m, CoordVec(m, 0));
        for (std::size_t k = 0; k < m; ++k) {
            mat[k][k] = 1;
            for (std::size_t r = 0; r < m; ++r)
                mat[r][k] -= simple_root(s)[k] * simple_coroot(s)[r];
        }
        gens.push_back(std::move(mat));
    }
    auto matmul = [m](const std::vector<CoordVec>& a,
                      const std::vector<CoordVec>& b) {
        std::vector<CoordVec> r(m, CoordVec(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t j = 0; j < m; ++j)
                    r[i][j] += a[i][k] * b[k][j];
        return r;
    };

    std::map<std::vector<CoordVec>, std::size_t> seen;
    WeylElement id;
    id.matrix.assign(m, CoordVec(m, 0));
    for (std::size_t i = 0; i < m; ++i) id.matrix[i][i] = 1;
    weyl_->elements_.push_back(id);
    seen[id.matrix] = 0;
    for (std::size_t head = 0; head < weyl_->elements_.size(); ++head) {
        WeylElement cur = weyl_->elements_[head];
        for (std::size_t s = 0; s < n; ++s) {
            auto nm = matmul(cur.matrix, gens[s]);
            if (seen.count(nm)) continue;
            WeylElement nxt;
            nxt.matrix = nm;
            nxt.word = cur.word;
            nxt.word.push_back(s);
            nxt.length = cur.length + 1;
            nxt.sign = (nxt.length % 2) ? -1 : 1;
            seen[nxt.matrix] = weyl_->elements_.size();
            weyl_->elements_.push_back(std::move(nxt));
        }
        if (weyl_->elements_.size() > 40320)
            throw std::logic_error("Weyl group too large for the catalog");
    }
}

void RootDatum::compute_coweight_lattice() {
    RatMat coroot_rows;
    for (const auto& c : pos_coroots_) coroot_rows.push_back(to_rat_vec(c));
    RatMat span = lattice_row_basis(coroot_rows);  // basis of span lattice
    std::size_t r = span.size();
    // Constraints: <alpha, sum c_j span_j> integral for every root.
    RatMat p(pos_roots_.size(), RatVec(r));
    Integer den(1);
    for (std::size_t i = 0; i < pos_roots_.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rational v(0);
            for (std::size_t k = 0; k < rank_; ++k)
                v += Rational(static_cast<long>(pos_roots_[i][k])) *
                     span[j][k];
            p[i][j] = v;
            den = lcm(den, Integer(v.get_den()));
        }
    IntMat pi(pos_roots_.size(), IntVec(r));
    for (std::size_t i = 0; i < pos_roots_.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rational scaled = p[i][j] * Rational(den);
            pi[i][j] = scaled.get_num();
        }
    auto snf = smith_normal_form(pi);
    if (snf.rank != r) throw std::logic_error("degenerate root pairing");
    // c = v * diag(den/d_i) gives the constraint-lattice basis.
    RatMat cw;
    for (std::size_t i = 0; i < r; ++i) {
        RatVec basis_vec(rank_, Rational(0));
        Rational scale = make_rational(den, snf.d[i][i]);
        for (std::size_t j = 0; j < r; ++j) {
            Rational cj = Rational(snf.v[j][i]) * scale;
            for (std::size_t k = 0; k < rank_; ++k)
                basis_vec[k] += cj * span[j][k];
        }
        cw.push_back(std::move(basis_vec));
    }
    coweight_basis_ = lattice_row_basis(cw);
}

bool RootDatum::dominant(const LatticePoint& lam) const {
    for (auto s : simple_)
        if (dot(pos_roots_[s], lam) < 0) return false;
    return true;
}

bool RootDatum::strictly_dominant(const LatticePoint& lam) const {
    for (auto s : simple_)
        if (dot(pos_roots_[s], lam) <= 0) return false;
    return true;
}

LatticePoint RootDatum::reflect(std::size_t s, const LatticePoint& lam) const {
    return sub_scaled(lam, dot(simple_root(s), lam), simple_coroot(s));
}

std::optional<std::pair<int, LatticePoint>> RootDatum::straighten(
    const LatticePoint& lam) const {
    LatticePoint cur = lam;
    int sign = 1;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t s = 0; s < simple_.size(); ++s) {
            Coord c = dot(simple_root(s), cur);
            if (c < 0) {
                cur = sub_scaled(cur, c, simple_coroot(s));
                sign = -sign;
                moved = true;
            }
        }
    }
    if (!strictly_dominant(cur)) return std::nullopt;
    return std::make_pair(sign, cur);
}

std::optional<LatticePoint> RootDatum::rho_vee_in_lattice() const {
    LatticePoint p(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
        if (!is_integral(rho_vee_q_[i])) return std::nullopt;
        p[i] = rho_vee_q_[i].get_num().get_si();
    }
    return p;
}

GroupAlgebraElement RootDatum::weyl_act(std::size_t w_idx,
                                        const GroupAlgebraElement& a) const {
    if (a.lattice() != tag_)
        throw LatticeMismatch("weyl_act: lattice mismatch");
    return a.mapped_support(weyl_->elements()[w_idx].matrix, tag_);
}

GroupAlgebraElement RootDatum::alt(const GroupAlgebraElement& a) const {
    GroupAlgebraElement acc(tag_);
    for (std::size_t w = 0; w < weyl_->size(); ++w) {
        const auto& el = weyl_->elements()[w];
        GroupAlgebraElement img = a.mapped_support(el.matrix, tag_);
        if (el.sign > 0)
            acc += img;
        else
            acc -= img;
    }
    return acc;
}

bool RootDatum::is_symmetric(const GroupAlgebraElement& a) const {
    for (std::size_t s = 0; s < simple_.size(); ++s) {
        std::vector<CoordVec> mat(rank_, CoordVec(rank_, 0));
        for (std::size_t k = 0; k < rank_; ++k) {
            mat[k][k] = 1;
            for (std::size_t r = 0; r < rank_; ++r)
                mat[r][k] -= simple_root(s)[k] * simple_coroot(s)[r];
        }
        if (a.mapped_support(mat, tag_) != a) return false;
    }
    return true;
}

bool RootDatum::is_alternating(const GroupAlgebraElement& a) const {
    for (std::size_t s = 0; s < simple_.size(); ++s) {
        std::vector<CoordVec> mat(rank_, CoordVec(rank_, 0));
        for (std::size_t k = 0; k < rank_; ++k) {
            mat[k][k] = 1;
            for (std::size_t r = 0; r < rank_; ++r)
                mat[r][k] -= simple_root(s)[k] * simple_coroot(s)[r];
        }
        if (a.mapped_support(mat, tag_) != -a) return false;
    }
    return true;
}

Coord DualGroupDatum::pairing(std::size_t coroot_idx,
                              const LatticePoint& x) const {
    return dot(positive_coroots[coroot_idx], x);
}

bool DualGroupDatum::dominant(const LatticePoint& x) const {
    for (auto s : simple_indices)
        if (pairing(s, x) < 0) return false;
    return true;
}

bool DualGroupDatum::strictly_dominant(const LatticePoint& x) const {
    for (auto s : simple_indices)
        if (pairing(s, x) <= 0) return false;
    return true;
}

RatVec DualGroupDatum::to_rational(const LatticePoint& x) const {
    RatVec out(x_basis[0].size(), Rational(0));
    for (std::size_t j = 0; j < x_basis.size(); ++j)
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] += Rational(static_cast<long>(x[j])) * x_basis[j][k];
    return out;
}

Rational DualGroupDatum::form(const RatVec& a, const RatVec& b) const {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            s += a[i] * invariant_form[i][j] * b[j];
    return s;
}

std::optional<std::pair<int, LatticePoint>> DualGroupDatum::straighten(
    const LatticePoint& xi) const {
    LatticePoint cur = xi;
    int sign = 1;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t k = 0; k < simple_indices.size(); ++k) {
            auto s = simple_indices[k];
            Coord c = pairing(s, cur);
            if (c < 0) {
                cur = sub_scaled(cur, c, positive_roots[s]);
                sign = -sign;
                moved = true;
            }
        }
    }
    if (!strictly_dominant(cur)) return std::nullopt;
    return std::make_pair(sign, cur);
}

void RootDatum::build_dual() const {
    auto dual = std::make_shared<DualGroupDatum>();
    dual->tag = tag_ + ":X";
    // 𝒳 = X_*(A) + Λ∨.
    RatMat gens = rat_identity(rank_);
    for (const auto& row : coweight_basis_) gens.push_back(row);
    dual->x_basis = lattice_row_basis(gens);
    if (dual->x_basis.size() != rank_)
        throw std::logic_error("X-lattice rank drop");

    dual->inc.source_rank = rank_;
    dual->inc.target_rank = rank_;
    dual->inc.injective = true;
    dual->inc.matrix.assign(rank_, CoordVec(rank_, 0));
    for (std::size_t j = 0; j < rank_; ++j) {
        RatVec ej(rank_, Rational(0));
        ej[j] = 1;
        auto c = integral_coords_in_basis(dual->x_basis, ej);
        if (!c) throw std::logic_error("X_*(A) not inside X-lattice");
        for (std::size_t i = 0; i < rank_; ++i)
            dual->inc.matrix[i][j] = (*c)[i];
    }

    for (std::size_t k = 0; k < nd_pos_.size(); ++k) {
        auto i = nd_pos_[k];
        auto cr = integral_coords_in_basis(dual->x_basis,
                                           to_rat_vec(pos_coroots_[i]));
        if (!cr) throw std::logic_error("coroot outside X-lattice");
        dual->positive_roots.push_back(*cr);
        // Φ^nd in 𝒴-coords: pairing of the root against the 𝒳-basis.
        CoordVec y(rank_);
        for (std::size_t j = 0; j < rank_; ++j) {
            Rational v(0);
            for (std::size_t c = 0; c < rank_; ++c)
                v += Rational(static_cast<long>(pos_roots_[i][c])) *
                     dual->x_basis[j][c];
            if (!is_integral(v))
                throw std::logic_error("Phi^nd does not pair integrally");
            y[j] = v.get_num().get_si();
        }
        dual->positive_coroots.push_back(y);
        if (std::find(simple_.begin(), simple_.end(), i) != simple_.end())
            dual->simple_indices.push_back(k);
    }

    auto rho = integral_coords_in_basis(dual->x_basis, rho_vee_q_);
    if (!rho) throw std::logic_error("rho^vee outside X-lattice");
    dual->rho_vee = *rho;

    // Simple reflections and the full Weyl group in 𝒳-coords.
    RatMat bt = rat_transpose(dual->x_basis);
    auto bt_inv = rat_inverse(bt);
    if (!bt_inv) throw std::logic_error("singular X-basis");
    auto conjugate = [&](const std::vector<CoordVec>& w) {
        RatMat wq(rank_, RatVec(rank_));
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j)
                wq[i][j] = Rational(static_cast<long>(w[i][j]));
        RatMat m = rat_mul(*bt_inv, rat_mul(wq, bt));
        std::vector<CoordVec> out(rank_, CoordVec(rank_, 0));
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) {
                if (!is_integral(m[i][j]))
                    throw std::logic_error("W does not preserve X-lattice");
                out[i][j] = m[i][j].get_num().get_si();
            }
        return out;
    };
    dual->weyl = std::make_shared<WeylGroup>();
    for (const auto& el : weyl_->elements()) {
        WeylElement copy = el;
        copy.matrix = conjugate(el.matrix);
        dual->weyl->elements_.push_back(std::move(copy));
    }
    for (std::size_t s = 0; s < simple_.size(); ++s) {
        std::vector<CoordVec> mat(rank_, CoordVec(rank_, 0));
        for (std::size_t k = 0; k < rank_; ++k) {
            mat[k][k] = 1;
            for (std::size_t r = 0; r < rank_; ++r)
                mat[r][k] -= simple_root(s)[k] * simple_coroot(s)[r];
        }
        dual->simple_reflections.push_back(conjugate(mat));
    }

    // W-averaged dot product on X_*(A) ⊗ Q, in ambient coordinates.
    RatMat s_sum(rank_, RatVec(rank_, Rational(0)));
    for (const auto& el : weyl_->elements()) {
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) {
                Rational acc(0);
                for (std::size_t k = 0; k < rank_; ++k)
                    acc += Rational(static_cast<long>(el.matrix[k][i])) *
                           Rational(static_cast<long>(el.matrix[k][j]));
                s_sum[i][j] += acc;
            }
    }
    dual->invariant_form = s_sum;

    dual_ = dual;
}

const DualGroupDatum& RootDatum::dual_datum() const {
    if (!dual_) build_dual();
    return *dual_;
}

IsogenyDecomposition RootDatum::isogeny_decomposition() const {
    IsogenyDecomposition dec;
    dec.source = this;

    std::size_t m = rank_;
    const RatMat& cw = coweight_basis_;  // basis of Λ∨ = X_*(A_ad)
    std::size_t nad = cw.size();

    // Adjoint datum of Φ in Λ∨ coordinates.
    auto ad = std::make_shared<RootDatum>();
    ad->tag_ = tag_ + "-ad";
    ad->rank_ = nad;
    ad->nonreduced_ = nonreduced_;
    ad->simple_ = simple_;
    ad->mult_ = mult_;
    ad->nd_pos_ = nd_pos_;
    for (std::size_t i = 0; i < pos_roots_.size(); ++i) {
        CoordVec root(nad);
        for (std::size_t j = 0; j < nad; ++j) {
            Rational v(0);
            for (std::size_t k = 0; k < m; ++k)
                v += Rational(static_cast<long>(pos_roots_[i][k])) * cw[j][k];
            if (!is_integral(v))
                throw std::logic_error("root not integral on coweights");
            root[j] = v.get_num().get_si();
        }
        auto coroot = integral_coords_in_basis(cw, to_rat_vec(pos_coroots_[i]));
        if (!coroot)
            throw std::logic_error("coroot outside the coweight lattice");
        ad->pos_roots_.push_back(std::move(root));
        ad->pos_coroots_.push_back(std::move(*coroot));
    }
    ad->build_weyl();
    ad->compute_coweight_lattice();
    ad->rho_vee_q_.assign(nad, Rational(0));
    for (auto i : ad->nd_pos_)
        for (std::size_t k = 0; k < nad; ++k)
            ad->rho_vee_q_[k] += make_rational(
                Integer(static_cast<long>(ad->pos_coroots_[i][k])), Integer(2));
    ad->validate();
    dec.adjoint = ad;

    // X_*(T): quotient of X_*(A') by the saturation of the coroot span.
    IntMat coroot_rows;
    for (const auto& c : pos_coroots_) {
        IntVec r(m);
        for (std::size_t k = 0; k < m; ++k) r[k] = Integer(static_cast<long>(c[k]));
        coroot_rows.push_back(std::move(r));
    }
    auto snf = smith_normal_form(coroot_rows);
    std::size_t r = snf.rank;
    dec.torus_rank = m - r;

    // pi_star: A-component solves <alpha_s, v> = <alpha_s, mu'> inside
    // span(Φ∨), expressed in Λ∨ coords; T-component is x·V restricted to
    // the trailing columns.
    dec.pi_star.source_rank = m;
    dec.pi_star.target_rank = nad + dec.torus_rank;
    dec.pi_star.matrix.assign(dec.pi_star.target_rank, CoordVec(m, 0));
    // Precompute: for basis vector e_j of X_*(A'), its projection.
    std::size_t ns = simple_.size();
    RatMat pair_on_span(ns, RatVec(nad));
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t j = 0; j < nad; ++j) {
            Rational v(0);
            for (std::size_t k = 0; k < m; ++k)
                v += Rational(static_cast<long>(simple_root(s)[k])) * cw[j][k];
            pair_on_span[s][j] = v;
        }
    for (std::size_t j = 0; j < m; ++j) {
        RatVec rhs(ns);
        for (std::size_t s = 0; s < ns; ++s)
            rhs[s] = Rational(static_cast<long>(simple_root(s)[j]));
        auto sol = rat_solve(pair_on_span, rhs);
        if (!sol) throw std::logic_error("projection solve failed");
        for (std::size_t i = 0; i < nad; ++i) {
            if (!is_integral((*sol)[i]))
                throw std::logic_error("projection not integral on Λ∨");
            dec.pi_star.matrix[i][j] = (*sol)[i].get_num().get_si();
        }
        for (std::size_t t = 0; t < dec.torus_rank; ++t)
            dec.pi_star.matrix[nad + t][j] = snf.v[j][r + t].get_si();
    }
    // Injectivity = full rational column rank.
    RatMat pim(dec.pi_star.target_rank, RatVec(m));
    for (std::size_t i = 0; i < dec.pi_star.target_rank; ++i)
        for (std::size_t j = 0; j < m; ++j)
            pim[i][j] = Rational(static_cast<long>(dec.pi_star.matrix[i][j]));
    dec.pi_star.injective = (rat_rank(pim) == m);
    if (!dec.pi_star.injective)
        throw std::logic_error("pi_star failed to be injective");
    return dec;
}

CartanSpec RootDatum::catalog_spec(const std::string& name) {
    CartanSpec spec;
    auto dash = name.find('-');
    std::string type = dash == std::string::npos ? name : name.substr(0, dash);
    std::string lat = dash == std::string::npos ? "" : name.substr(dash + 1);
    spec.type = type;
    if (type.size() > 2 && type[0] == 'B' && type[1] == 'C') {
        if (!lat.empty() && lat != "adjoint")
            throw std::invalid_argument("unknown catalog entry: " + name);
        spec.lattice.kind = LatticeChoice::Adjoint;
    } else if (lat == "adjoint") {
        spec.lattice.kind = LatticeChoice::Adjoint;
    } else if (lat == "sc") {
        spec.lattice.kind = LatticeChoice::SimplyConnected;
    } else {
        throw std::invalid_argument("unknown catalog entry: " + name);
    }
    return spec;
}

RootDatum RootDatum::catalog(const std::string& name) {
    return build(catalog_spec(name));
}

std::vector<std::string> RootDatum::catalog_names() {
    std::vector<std::string> names;
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2",
                          "C3", "C4", "D3", "D4", "G2"}) {
        names.push_back(std::string(t) + "-adjoint");
        names.push_back(std::string(t) + "-sc");
    }
    names.push_back("BC1");
    names.push_back("BC2");
    return names;
}

}  // namespace csw
