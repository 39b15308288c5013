#pragma once

#include "l2a/rational.hpp"

#include <map>
#include <vector>

namespace l2a {

using Tuple = std::vector<int>;

// All strictly increasing k-tuples from {0, ..., n-1}, lexicographic.
std::vector<Tuple> increasing_tuples(int n, int k);

// Sign of the permutation sorting t, 0 if t has a repeated entry.
int sort_sign(Tuple& t);

// Alternating k-linear map from an n-dimensional space to a d-dimensional one,
// stored on increasing index tuples.
class AltTensor {
public:
    AltTensor() = default;
    AltTensor(int arity, int in_dim, int out_dim) : k_(arity), n_(in_dim), d_(out_dim) {}

    int arity() const { return k_; }
    int in_dim() const { return n_; }
    int out_dim() const { return d_; }
    bool is_zero() const { return data_.empty(); }
    const std::map<Tuple, RVec>& entries() const { return data_; }

    // Value on basis vectors in any order (sign reconstructed).
    RVec at(Tuple idx) const;
    // Sets the value on basis vectors in the given order.
    void set(Tuple idx, const RVec& value);
    void add(Tuple idx, const RVec& value);

    // Multilinear evaluation on arbitrary vectors.
    RVec eval(const std::vector<RVec>& args) const;

    AltTensor operator+(const AltTensor& o) const;
    AltTensor operator-(const AltTensor& o) const;
    AltTensor scaled(const Rational& c) const;
    bool operator==(const AltTensor& o) const;

    // Flatten to a vector of length d * C(n, k): tuple-major, output-minor.
    RVec flatten() const;
    static AltTensor unflatten(int arity, int in_dim, int out_dim, const RVec& flat);

private:
    void check(const Tuple& idx) const;
    int k_ = 0;
    int n_ = 0;
    int d_ = 0;
    std::map<Tuple, RVec> data_;
};

}  // namespace l2a
