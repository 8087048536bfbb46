#include "qms/quantum_ops.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qms/hermitian_eigen.hpp"

namespace qms {

namespace {

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    // Tr(a b) for matching dims, without forming the product.
    const int n = a.dim();
    cdouble s = 0.0;
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) s += a(r, k) * b(k, r);
    return s.real();
}

}  // namespace

JointDistribution::JointDistribution(std::vector<int> shape, std::vector<double> probs, double tol)
    : shape_(std::move(shape)), p_(std::move(probs)) {
    std::size_t cells = 1;
    for (const int s : shape_) {
        if (s <= 0) throw std::invalid_argument("JointDistribution: bad shape");
        cells *= static_cast<std::size_t>(s);
    }
    if (p_.size() != cells) throw std::invalid_argument("JointDistribution: value count mismatch");
    double sum = 0.0;
    for (double& x : p_) {
        if (x < -tol) throw std::invalid_argument("JointDistribution: negative probability");
        if (x < 0.0) x = 0.0;
        sum += x;
    }
    if (std::abs(sum - 1.0) > tol) {
        std::ostringstream msg;
        msg << "JointDistribution: probabilities sum to " << sum;
        throw std::invalid_argument(msg.str());
    }
}

double JointDistribution::at(std::span<const int> idx) const {
    if (idx.size() != shape_.size()) throw std::invalid_argument("JointDistribution::at: bad index");
    std::size_t flat = 0;
    for (std::size_t p = 0; p < shape_.size(); ++p) {
        if (idx[p] < 0 || idx[p] >= shape_[p])
            throw std::out_of_range("JointDistribution::at: index out of range");
        flat = flat * shape_[p] + static_cast<std::size_t>(idx[p]);
    }
    return p_[flat];
}

std::vector<double> JointDistribution::marginal(int party) const {
    if (party < 0 || party >= parties()) throw std::invalid_argument("marginal: bad party");
    std::vector<double> out(shape_[party], 0.0);
    std::vector<int> idx(shape_.size(), 0);
    for (std::size_t flat = 0; flat < p_.size(); ++flat) {
        out[idx[party]] += p_[flat];
        for (int p = parties() - 1; p >= 0; --p) {
            if (++idx[p] < shape_[p]) break;
            idx[p] = 0;
        }
    }
    return out;
}

std::vector<double> JointDistribution::row(int a_outcome) const {
    if (parties() != 2) throw std::invalid_argument("row: bipartite distribution required");
    std::vector<double> out(shape_[1]);
    for (int j = 0; j < shape_[1]; ++j) out[j] = p_[static_cast<std::size_t>(a_outcome) * shape_[1] + j];
    return out;
}

std::vector<double> JointDistribution::column(int b_outcome) const {
    if (parties() != 2) throw std::invalid_argument("column: bipartite distribution required");
    std::vector<double> out(shape_[0]);
    for (int i = 0; i < shape_[0]; ++i) out[i] = p_[static_cast<std::size_t>(i) * shape_[1] + b_outcome];
    return out;
}

Assemblage::Assemblage(std::vector<ComplexMatrix> members, double tol) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("Assemblage: no members");
    double trace_sum = 0.0;
    for (const auto& m : members_) {
        if (m.dim() != members_[0].dim()) throw std::invalid_argument("Assemblage: mixed dimensions");
        if (m.hermiticity_error() > tol) throw std::invalid_argument("Assemblage: member not Hermitian");
        if (lambda_min(m) < -tol) throw std::invalid_argument("Assemblage: member not PSD");
        trace_sum += m.trace().real();
    }
    if (std::abs(trace_sum - 1.0) > tol)
        throw std::invalid_argument("Assemblage: member traces do not sum to 1");
}

ComplexMatrix Assemblage::sum() const {
    ComplexMatrix s(members_[0].dim());
    for (const auto& m : members_) s += m;
    return s;
}

ProbabilityVector born_probabilities(const DensityMatrix& state, const ProjectiveMeasurement& meas) {
    if (state.dim() != meas.dim())
        throw std::invalid_argument("born_probabilities: dimension mismatch");
    std::vector<double> p(meas.outcomes());
    for (int i = 0; i < meas.outcomes(); ++i)
        p[i] = real_trace_product(meas.projector(i), state.matrix());
    return ProbabilityVector::normalized(std::move(p));
}

JointDistribution joint_distribution(const DensityMatrix& state,
                                     std::span<const ProjectiveMeasurement> meas) {
    if (meas.size() != state.party_dims().size())
        throw std::invalid_argument("joint_distribution: one measurement per party required");
    std::vector<int> shape;
    for (std::size_t p = 0; p < meas.size(); ++p) {
        if (meas[p].dim() != state.party_dims()[p])
            throw std::invalid_argument("joint_distribution: measurement/party dimension mismatch");
        shape.push_back(meas[p].outcomes());
    }
    std::size_t cells = 1;
    for (const int s : shape) cells *= static_cast<std::size_t>(s);

    std::vector<double> probs(cells);
    std::vector<int> idx(shape.size(), 0);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        ComplexMatrix op = meas[0].projector(idx[0]);
        for (std::size_t p = 1; p < meas.size(); ++p)
            op = ComplexMatrix::kron(op, meas[p].projector(idx[p]));
        probs[flat] = real_trace_product(op, state.matrix());
        for (int p = static_cast<int>(shape.size()) - 1; p >= 0; --p) {
            if (++idx[p] < shape[p]) break;
            idx[p] = 0;
        }
    }
    return JointDistribution(std::move(shape), std::move(probs));
}

Assemblage assemblage(const DensityMatrix& state, const ProjectiveMeasurement& meas_on_a) {
    if (state.parties() != 2) throw std::invalid_argument("assemblage: bipartite state required");
    const int da = state.party_dims()[0], db = state.party_dims()[1];
    if (meas_on_a.dim() != da) throw std::invalid_argument("assemblage: A dimension mismatch");

    std::vector<ComplexMatrix> members;
    members.reserve(meas_on_a.outcomes());
    for (int i = 0; i < meas_on_a.outcomes(); ++i) {
        const ComplexMatrix& proj = meas_on_a.projector(i);
        ComplexMatrix member(db);
        // Tr_A[(Pi x 1) rho]_{kl} = sum_{a,b} Pi_{ab} rho_{(b k),(a l)}
        for (int k = 0; k < db; ++k)
            for (int l = 0; l < db; ++l) {
                cdouble s = 0.0;
                for (int a = 0; a < da; ++a)
                    for (int b = 0; b < da; ++b)
                        s += proj(a, b) * state.matrix()(b * db + k, a * db + l);
                member(k, l) = s;
            }
        members.push_back(std::move(member));
    }
    return Assemblage(std::move(members));
}

double expectation(const DensityMatrix& state, std::span<const ProjectiveMeasurement> meas) {
    const JointDistribution joint = joint_distribution(state, meas);
    double value = 0.0;
    std::vector<int> idx(joint.shape().size(), 0);
    for (std::size_t flat = 0; flat < joint.size(); ++flat) {
        double labels = 1.0;
        for (std::size_t p = 0; p < meas.size(); ++p) labels *= meas[p].labels()[idx[p]];
        value += labels * joint[flat];
        for (int p = static_cast<int>(idx.size()) - 1; p >= 0; --p) {
            if (++idx[p] < joint.shape()[p]) break;
            idx[p] = 0;
        }
    }
    return value;
}

}  // namespace qms
