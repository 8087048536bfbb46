#include "qms/lhv.hpp"

#include <cmath>
#include <stdexcept>

namespace qms {

void LhvModel::validate(double tol) const {
    shape.validate();
    if (weights.empty() || weights.size() != outcome_dists.size())
        throw std::invalid_argument("LhvModel: one distribution block per hidden value required");
    double wsum = 0.0;
    for (const double w : weights) {
        if (w < -tol) throw std::invalid_argument("LhvModel: negative weight");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > tol) throw std::invalid_argument("LhvModel: weights must sum to 1");

    for (const auto& block : outcome_dists) {
        if (static_cast<int>(block.size()) != shape.parties())
            throw std::invalid_argument("LhvModel: block party count mismatch");
        for (int p = 0; p < shape.parties(); ++p) {
            if (static_cast<int>(block[p].size()) != shape.meas_per_party[p])
                throw std::invalid_argument("LhvModel: block measurement count mismatch");
            for (const auto& dist : block[p]) {
                if (static_cast<int>(dist.size()) != shape.outcomes_per_party[p])
                    throw std::invalid_argument("LhvModel: outcome count mismatch");
                double sum = 0.0;
                for (const double x : dist) {
                    if (x < -tol) throw std::invalid_argument("LhvModel: negative outcome probability");
                    sum += x;
                }
                if (std::abs(sum - 1.0) > tol)
                    throw std::invalid_argument("LhvModel: outcome distribution not normalized");
            }
        }
    }
    if (!hidden_states.empty() && hidden_states.size() != weights.size())
        throw std::invalid_argument("LhvModel: hidden state count must match weights");
}

MagicSquareTensor build_from_lhv(const LhvModel& model) {
    model.validate();
    const TensorShape& shape = model.shape;
    std::vector<double> values(shape.cells(), 0.0);
    std::vector<int> idx(shape.axes());
    for (std::size_t flat = 0; flat < values.size(); ++flat) {
        shape.unflatten(flat, idx);
        double cell = 0.0;
        for (std::size_t lambda = 0; lambda < model.weights.size(); ++lambda) {
            double term = model.weights[lambda];
            int axis = 0;
            for (int p = 0; p < shape.parties(); ++p)
                for (int m = 0; m < shape.meas_per_party[p]; ++m, ++axis)
                    term *= model.outcome_dists[lambda][p][m][idx[axis]];
            cell += term;
        }
        values[flat] = cell;
    }
    return MagicSquareTensor(shape, std::move(values));
}

Assemblage lhs_assemblage(const LhvModel& model, int meas) {
    model.validate();
    if (model.hidden_states.empty())
        throw std::invalid_argument("lhs_assemblage: model carries no hidden states");
    if (meas < 0 || meas >= model.shape.meas_per_party[0])
        throw std::invalid_argument("lhs_assemblage: measurement index out of range");

    const int outcomes = model.shape.outcomes_per_party[0];
    const int dim = model.hidden_states[0].dim();
    std::vector<ComplexMatrix> members(outcomes, ComplexMatrix(dim));
    for (std::size_t lambda = 0; lambda < model.weights.size(); ++lambda) {
        for (int i = 0; i < outcomes; ++i) {
            ComplexMatrix term = model.hidden_states[lambda].matrix();
            term *= cdouble{model.weights[lambda] * model.outcome_dists[lambda][0][meas][i], 0.0};
            members[i] += term;
        }
    }
    return Assemblage(std::move(members));
}

}  // namespace qms
