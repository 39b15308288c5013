#include "l2a/alt_tensor.hpp"

#include "l2a/errors.hpp"

namespace l2a {

std::vector<Tuple> increasing_tuples(int n, int k) {
    std::vector<Tuple> out;
    if (k < 0 || k > n) return out;
    Tuple t(k);
    for (int i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        int pos = k - 1;
        while (pos >= 0 && t[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++t[pos];
        for (int j = pos + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

int sort_sign(Tuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] == t[i]) return 0;
    return sign;
}

void AltTensor::check(const Tuple& idx) const {
    if (static_cast<int>(idx.size()) != k_) throw InputError("tensor arity mismatch");
    for (int i : idx)
        if (i < 0 || i >= n_) throw InputError("tensor index out of range");
}

RVec AltTensor::at(Tuple idx) const {
    check(idx);
    int s = sort_sign(idx);
    if (s == 0) return zeros(d_);
    auto it = data_.find(idx);
    if (it == data_.end()) return zeros(d_);
    return s > 0 ? it->second : scale(Rational(-1), it->second);
}

void AltTensor::set(Tuple idx, const RVec& value) {
    check(idx);
    if (static_cast<int>(value.size()) != d_) throw InputError("tensor value has wrong dimension");
    int s = sort_sign(idx);
    if (s == 0) {
        if (!l2a::is_zero(value)) throw InputError("alternating tensor must vanish on repeated arguments");
        return;
    }
    if (l2a::is_zero(value)) data_.erase(idx);
    else data_[idx] = s > 0 ? value : scale(Rational(-1), value);
}

void AltTensor::add(Tuple idx, const RVec& value) {
    RVec cur = at(idx);
    set(idx, l2a::add(cur, value));
}

RVec AltTensor::eval(const std::vector<RVec>& args) const {
    if (static_cast<int>(args.size()) != k_) throw PreconditionError("tensor arity mismatch");
    RVec out = zeros(d_);
    // sum over all index tuples with nonzero coefficients (distinct entries)
    Tuple idx(k_, 0);
    std::vector<std::vector<int>> support(k_);
    for (int a = 0; a < k_; ++a)
        for (int i = 0; i < n_; ++i)
            if (sgn(args[a][i]) != 0) support[a].push_back(i);
    std::vector<std::size_t> pos(k_, 0);
    for (int a = 0; a < k_; ++a)
        if (support[a].empty()) return out;
    while (true) {
        Rational c = 1;
        for (int a = 0; a < k_; ++a) {
            idx[a] = support[a][pos[a]];
            c *= args[a][idx[a]];
        }
        Tuple sorted = idx;
        int s = sort_sign(sorted);
        if (s != 0) {
            auto it = data_.find(sorted);
            if (it != data_.end()) axpy(out, s > 0 ? c : Rational(-c), it->second);
        }
        int a = k_ - 1;
        while (a >= 0 && ++pos[a] == support[a].size()) {
            pos[a] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return out;
}

AltTensor AltTensor::operator+(const AltTensor& o) const {
    if (k_ != o.k_ || n_ != o.n_ || d_ != o.d_) throw PreconditionError("tensor shape mismatch");
    AltTensor r = *this;
    for (const auto& [t, v] : o.data_) r.add(t, v);
    return r;
}

AltTensor AltTensor::operator-(const AltTensor& o) const { return *this + o.scaled(Rational(-1)); }

AltTensor AltTensor::scaled(const Rational& c) const {
    AltTensor r(k_, n_, d_);
    if (sgn(c) == 0) return r;
    for (const auto& [t, v] : data_) r.data_[t] = scale(c, v);
    return r;
}

bool AltTensor::operator==(const AltTensor& o) const {
    return k_ == o.k_ && n_ == o.n_ && d_ == o.d_ && data_ == o.data_;
}

RVec AltTensor::flatten() const {
    RVec out;
    for (const auto& t : increasing_tuples(n_, k_)) {
        RVec v = at(t);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

AltTensor AltTensor::unflatten(int arity, int in_dim, int out_dim, const RVec& flat) {
    AltTensor r(arity, in_dim, out_dim);
    auto tuples = increasing_tuples(in_dim, arity);
    if (flat.size() != tuples.size() * static_cast<std::size_t>(out_dim))
        throw PreconditionError("flattened tensor has wrong length");
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        RVec v(flat.begin() + static_cast<long>(i * out_dim), flat.begin() + static_cast<long>((i + 1) * out_dim));
        r.set(tuples[i], v);
    }
    return r;
}

}  // namespace l2a
