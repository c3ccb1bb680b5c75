#pragma once

#include "bordism/fixedring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bordism {

/// AST of G-manifold constructions: the point, projectivizations
/// P(L_{w_0} + ... + L_{w_n}) of sums of weighted lines (zero weight = trivial
/// line), binary products and finite disjoint unions.
struct ManifoldExpr {
    enum class Kind { Point, Proj, Product, Union };

    Kind kind = Kind::Point;
    std::vector<std::vector<int>> lines;  // Proj only; one weight vector per line
    std::vector<ManifoldExpr> children;   // Product: exactly 2; Union: >= 1

    static ManifoldExpr point() { return {}; }
    static ManifoldExpr proj(std::vector<std::vector<int>> lines);
    static ManifoldExpr product(ManifoldExpr a, ManifoldExpr b);
    static ManifoldExpr disjoint_union(std::vector<ManifoldExpr> parts);

    /// real dimension; nullopt for unions of mixed dimension
    std::optional<int> dimension() const;
    /// rank of the torus acting (maximum over weights; 0 for pure points)
    int rank() const;

    bool operator==(const ManifoldExpr& o) const;

    std::string str() const; // s-expression form
};

/// geometric fixed point map into MU_*[e_V, e_V^{-1}, Y_{V,d}]
FixedDatum phi_omega(const ContextPtr& ctx, const ManifoldExpr& m);

/// class of the underlying manifold with the action forgotten
MuElement underlying_class(const ContextPtr& ctx, const ManifoldExpr& m);

struct CatalogBounds {
    int max_lines;
    int max_entry;  // per-coordinate bound on canonical line weights
    int max_pairs;  // cap on pairwise products and on disjoint unions

    static CatalogBounds defaults(int r);
};

/// Deterministic, duplicate-free list of test manifolds: canonical Proj
/// expressions (unique up to line permutation and common weight translation,
/// which leave phi_omega unchanged), plus pairwise products and same-dimension
/// disjoint unions of the two-line entries.
std::vector<ManifoldExpr> catalog(int r, const CatalogBounds& bounds);
std::vector<ManifoldExpr> catalog(int r);

} // namespace bordism
