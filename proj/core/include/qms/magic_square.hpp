#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qms/quantum_ops.hpp"
#include "qms/tolerances.hpp"

namespace qms {

// Index space of a probability tensor holding one outcome index per
// (party, measurement) pair: axes ordered party-major then measurement-major
// (i1 i2 | j1 j2 | k1 k2), flattened row-major.  Within a party all
// measurements share an outcome count.
struct TensorShape {
    std::vector<int> meas_per_party;
    std::vector<int> outcomes_per_party;

    int parties() const { return static_cast<int>(meas_per_party.size()); }
    int axes() const;
    int party_of_axis(int axis) const;
    int axis_of(int party, int meas) const;
    int axis_extent(int axis) const { return outcomes_per_party[party_of_axis(axis)]; }
    std::size_t cells() const;

    std::size_t flatten(std::span<const int> idx) const;
    void unflatten(std::size_t flat, std::span<int> idx) const;

    void validate() const;
    bool operator==(const TensorShape&) const = default;
};

// Non-negative tensor over the full index space, summing to 1.
class MagicSquareTensor {
public:
    MagicSquareTensor(TensorShape shape, std::vector<double> values, double tol = kValidationTol);

    const TensorShape& shape() const { return shape_; }
    std::span<const double> values() const { return v_; }
    double operator[](std::size_t flat) const { return v_[flat]; }
    double at(std::span<const int> idx) const { return v_[shape_.flatten(idx)]; }

private:
    TensorShape shape_;
    std::vector<double> v_;
};

// Disjoint signed cell sets over a tensor's flat index space.
struct NodeSelection {
    std::vector<std::size_t> plus_cells;
    std::vector<std::size_t> minus_cells;
};

// Sum over plus cells minus sum over minus cells; validates bounds and
// disjointness.
double node_sum(const MagicSquareTensor& tensor, const NodeSelection& selection);

// Partial sums keeping one measurement per listed party (nullopt sums a party
// out entirely).  Result axes follow party order.
JointDistribution marginal(const MagicSquareTensor& tensor,
                           std::span<const std::optional<int>> meas_choice);

// Cells signed by (-1)^(sum of selected outcome indices), one chosen
// measurement per party; index 0 carries label +1, so the sign equals the
// product of outcome labels.
NodeSelection parity_selection(const TensorShape& shape, std::span<const int> pattern);
double parity_expectation(const MagicSquareTensor& tensor, std::span<const int> pattern);

// E for one dichotomic measurement on each of two parties.
NodeSelection correlation_selection(const TensorShape& shape, int meas_a, int meas_b);
double correlation(const MagicSquareTensor& tensor, int meas_a, int meas_b);

// E(x,y) - E(x,y') + E(x',y) + E(x',y') for the 2x2x2 shape.
double chsh_value(const MagicSquareTensor& tensor);

}  // namespace qms
