#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace bordism {

/// Row-style Hermite normal form of an integer lattice given by spanning
/// rows, maintained incrementally. Tracks the unimodular-ish transform so
/// each basis row is known as a Z-combination of the inserted generators.
class HnfLattice {
  public:
    explicit HnfLattice(int ncols) : ncols_(ncols) {}

    /// insert a spanning row (dimension ncols); returns true if rank grew
    bool insert(std::vector<mpz_class> row);

    /// finish: reduce entries above each pivot into [0, pivot)
    void reduce();

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    int generators_inserted() const { return ngen_; }

    /// membership of an integer vector in the row span
    bool contains(const std::vector<mpz_class>& v) const;

    /// coordinates of v over the *inserted generators* (not the HNF rows),
    /// if v lies in the lattice
    std::optional<std::vector<mpz_class>> coordinates(const std::vector<mpz_class>& v) const;

    /// rational coordinates over the inserted generators; succeeds whenever v
    /// lies in the rational span of the rows
    std::optional<std::vector<mpq_class>> rational_coordinates(const std::vector<mpq_class>& v) const;

    const std::vector<std::vector<mpz_class>>& rows() const { return rows_; }

  private:
    // decompose v over the HNF rows; returns per-row multipliers or nullopt
    std::optional<std::vector<mpz_class>> row_coords(std::vector<mpz_class> v) const;

    int ncols_;
    int ngen_ = 0;
    std::vector<std::vector<mpz_class>> rows_;   // echelon rows, pivots increasing
    std::vector<int> pivots_;                    // pivot column per row
    std::vector<std::vector<mpz_class>> trans_;  // row i = sum trans_[i][g] * generator g
};

} // namespace bordism
