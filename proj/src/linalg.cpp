#include "curvelink/linalg.hpp"

#include <algorithm>

namespace curvelink {

int row_space::leading(const row_vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) return (int)i;
    return -1;
}

void row_space::reduce(row_vec& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint8_t c = v[pivots_[r]];
        if (!c) continue;
        uint8_t f = F_->neg(c);
        const row_vec& row = rows_[r];
        for (size_t j = pivots_[r]; j < width_; ++j)
            if (row[j]) v[j] = F_->axpy(v[j], f, row[j]);
    }
}

std::optional<int> row_space::insert(row_vec v) {
    reduce(v);
    int lead = leading(v);
    if (lead < 0) return std::nullopt;
    // normalize pivot to 1
    uint8_t s = F_->inv(v[lead]);
    if (s != 1)
        for (size_t j = lead; j < width_; ++j)
            if (v[j]) v[j] = F_->mul(v[j], s);
    // clear this column in existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint8_t c = rows_[r][lead];
        if (!c) continue;
        uint8_t f = F_->neg(c);
        for (size_t j = lead; j < width_; ++j)
            if (v[j]) rows_[r][j] = F_->axpy(rows_[r][j], f, v[j]);
    }
    // insert keeping pivot order
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, lead);
    return lead;
}

bool row_space::contains(row_vec v) const {
    reduce(v);
    return leading(v) < 0;
}

size_t rank_of(const finite_field& F, const std::vector<row_vec>& vecs) {
    if (vecs.empty()) return 0;
    row_space rs(&F, vecs[0].size());
    for (const auto& v : vecs) rs.insert(v);
    return rs.rank();
}

}  // namespace curvelink
