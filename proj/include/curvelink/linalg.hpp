// linalg.hpp -- dense row reduction over small finite fields.
//
// row_space maintains a matrix in reduced row echelon form under repeated
// insertion; it is the workhorse behind module enumeration, conductor
// computation and rank counting.  Rows are dense uint8 vectors of a fixed
// width (one entry per ambient slot).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "curvelink/finite_field.hpp"

namespace curvelink {

using row_vec = std::vector<uint8_t>;

class row_space {
  public:
    row_space() = default;  // empty placeholder; assign a real one before use
    row_space(const finite_field* F, size_t width) : F_(F), width_(width) {}

    size_t width() const { return width_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<row_vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // reduce v in place against the current rows; afterwards v has zeros in
    // all pivot columns
    void reduce(row_vec& v) const;

    // insert v (reducing first); returns the new pivot column or nullopt if
    // v was already in the span
    std::optional<int> insert(row_vec v);

    bool contains(row_vec v) const;

    // leading nonzero column of v, or -1
    static int leading(const row_vec& v);

  private:
    const finite_field* F_ = nullptr;
    size_t width_ = 0;
    std::vector<row_vec> rows_;  // sorted by pivot column, fully reduced
    std::vector<int> pivots_;
};

// rank of an arbitrary collection of vectors
size_t rank_of(const finite_field& F, const std::vector<row_vec>& vecs);

}  // namespace curvelink
