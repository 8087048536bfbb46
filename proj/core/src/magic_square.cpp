#include "qms/magic_square.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qms {

int TensorShape::axes() const {
    return std::accumulate(meas_per_party.begin(), meas_per_party.end(), 0);
}

int TensorShape::party_of_axis(int axis) const {
    int p = 0;
    while (axis >= meas_per_party[p]) axis -= meas_per_party[p++];
    return p;
}

int TensorShape::axis_of(int party, int meas) const {
    if (party < 0 || party >= parties() || meas < 0 || meas >= meas_per_party[party])
        throw std::invalid_argument("TensorShape::axis_of: out of range");
    int axis = meas;
    for (int p = 0; p < party; ++p) axis += meas_per_party[p];
    return axis;
}

std::size_t TensorShape::cells() const {
    std::size_t n = 1;
    for (int p = 0; p < parties(); ++p)
        for (int m = 0; m < meas_per_party[p]; ++m) n *= static_cast<std::size_t>(outcomes_per_party[p]);
    return n;
}

std::size_t TensorShape::flatten(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != axes()) throw std::invalid_argument("flatten: wrong index count");
    std::size_t flat = 0;
    for (int a = 0; a < axes(); ++a) {
        const int extent = axis_extent(a);
        if (idx[a] < 0 || idx[a] >= extent) throw std::out_of_range("flatten: index out of range");
        flat = flat * extent + static_cast<std::size_t>(idx[a]);
    }
    return flat;
}

void TensorShape::unflatten(std::size_t flat, std::span<int> idx) const {
    for (int a = axes() - 1; a >= 0; --a) {
        const int extent = axis_extent(a);
        idx[a] = static_cast<int>(flat % extent);
        flat /= extent;
    }
}

void TensorShape::validate() const {
    if (meas_per_party.empty() || meas_per_party.size() != outcomes_per_party.size())
        throw std::invalid_argument("TensorShape: parties must carry measurement and outcome counts");
    if (parties() > 3)
        throw std::invalid_argument("TensorShape: at most 3 parties are supported");
    for (int p = 0; p < parties(); ++p)
        if (meas_per_party[p] <= 0 || outcomes_per_party[p] <= 0)
            throw std::invalid_argument("TensorShape: counts must be positive");
}

MagicSquareTensor::MagicSquareTensor(TensorShape shape, std::vector<double> values, double tol)
    : shape_(std::move(shape)), v_(std::move(values)) {
    shape_.validate();
    if (v_.size() != shape_.cells()) throw std::invalid_argument("MagicSquareTensor: value count mismatch");
    double sum = 0.0;
    for (double& x : v_) {
        if (x < -tol) {
            std::ostringstream msg;
            msg << "MagicSquareTensor: negative entry " << x;
            throw std::invalid_argument(msg.str());
        }
        if (x < 0.0) x = 0.0;
        sum += x;
    }
    if (std::abs(sum - 1.0) > tol) {
        std::ostringstream msg;
        msg << "MagicSquareTensor: entries sum to " << sum;
        throw std::invalid_argument(msg.str());
    }
}

double node_sum(const MagicSquareTensor& tensor, const NodeSelection& selection) {
    const std::size_t cells = tensor.shape().cells();
    std::vector<char> seen(cells, 0);
    auto mark = [&](std::span<const std::size_t> set) {
        for (const std::size_t c : set) {
            if (c >= cells) throw std::invalid_argument("node_sum: cell index out of range");
            if (seen[c]) throw std::invalid_argument("node_sum: plus/minus sets overlap");
            seen[c] = 1;
        }
    };
    mark(selection.plus_cells);
    mark(selection.minus_cells);
    double plus = 0.0, minus = 0.0;
    for (const std::size_t c : selection.plus_cells) plus += tensor[c];
    for (const std::size_t c : selection.minus_cells) minus += tensor[c];
    return plus - minus;
}

JointDistribution marginal(const MagicSquareTensor& tensor,
                           std::span<const std::optional<int>> meas_choice) {
    const TensorShape& shape = tensor.shape();
    if (static_cast<int>(meas_choice.size()) != shape.parties())
        throw std::invalid_argument("marginal: one (optional) measurement per party required");

    std::vector<int> kept_parties;
    std::vector<int> kept_axes;
    std::vector<int> out_shape;
    for (int p = 0; p < shape.parties(); ++p) {
        if (!meas_choice[p]) continue;
        kept_parties.push_back(p);
        kept_axes.push_back(shape.axis_of(p, *meas_choice[p]));
        out_shape.push_back(shape.outcomes_per_party[p]);
    }
    if (kept_parties.empty()) throw std::invalid_argument("marginal: keep at least one party");

    std::size_t out_cells = 1;
    for (const int s : out_shape) out_cells *= static_cast<std::size_t>(s);
    std::vector<double> out(out_cells, 0.0);

    std::vector<int> idx(shape.axes());
    for (std::size_t flat = 0; flat < shape.cells(); ++flat) {
        shape.unflatten(flat, idx);
        std::size_t out_flat = 0;
        for (std::size_t k = 0; k < kept_axes.size(); ++k)
            out_flat = out_flat * out_shape[k] + static_cast<std::size_t>(idx[kept_axes[k]]);
        out[out_flat] += tensor[flat];
    }
    return JointDistribution(std::move(out_shape), std::move(out));
}

NodeSelection parity_selection(const TensorShape& shape, std::span<const int> pattern) {
    if (static_cast<int>(pattern.size()) != shape.parties())
        throw std::invalid_argument("parity_selection: one measurement per party required");
    std::vector<int> axes;
    for (int p = 0; p < shape.parties(); ++p) axes.push_back(shape.axis_of(p, pattern[p]));

    NodeSelection sel;
    std::vector<int> idx(shape.axes());
    for (std::size_t flat = 0; flat < shape.cells(); ++flat) {
        shape.unflatten(flat, idx);
        int sum = 0;
        for (const int a : axes) sum += idx[a];
        (sum % 2 == 0 ? sel.plus_cells : sel.minus_cells).push_back(flat);
    }
    return sel;
}

double parity_expectation(const MagicSquareTensor& tensor, std::span<const int> pattern) {
    const TensorShape& shape = tensor.shape();
    if (shape.parties() != 3) throw std::invalid_argument("parity_expectation: tripartite tensor required");
    for (const int n : shape.outcomes_per_party)
        if (n != 2) throw std::invalid_argument("parity_expectation: dichotomic outcomes required");
    return node_sum(tensor, parity_selection(shape, pattern));
}

NodeSelection correlation_selection(const TensorShape& shape, int meas_a, int meas_b) {
    if (shape.parties() != 2)
        throw std::invalid_argument("correlation_selection: bipartite tensor required");
    const std::array<int, 2> pattern{meas_a, meas_b};
    return parity_selection(shape, pattern);
}

double correlation(const MagicSquareTensor& tensor, int meas_a, int meas_b) {
    const TensorShape& shape = tensor.shape();
    if (shape.parties() != 2) throw std::invalid_argument("correlation: bipartite tensor required");
    if (shape.outcomes_per_party[0] != 2 || shape.outcomes_per_party[1] != 2)
        throw std::invalid_argument("correlation: dichotomic measurements required");
    return node_sum(tensor, correlation_selection(shape, meas_a, meas_b));
}

double chsh_value(const MagicSquareTensor& tensor) {
    const TensorShape& shape = tensor.shape();
    const TensorShape expected{{2, 2}, {2, 2}};
    if (!(shape == expected))
        throw std::invalid_argument("chsh_value: 2 parties x 2 measurements x 2 outcomes required");
    return correlation(tensor, 0, 0) - correlation(tensor, 0, 1) + correlation(tensor, 1, 0) +
           correlation(tensor, 1, 1);
}

}  // namespace qms
