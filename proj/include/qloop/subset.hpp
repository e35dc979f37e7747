#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qloop {

/// Partition: weakly decreasing nonnegative parts, trailing zeros permitted.
/// Equality ignores trailing zeros; operations sensitive to the number of
/// variables (Schur evaluation) use the stored length.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int num_parts() const { return static_cast<int>(parts_.size()); }
    /// part k (1-based), 0 beyond the stored length
    int part(int k) const {
        return (k >= 1 && k <= num_parts()) ? parts_[static_cast<std::size_t>(k - 1)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    int weight() const;

    bool contains(const Partition& mu) const;
    bool fits_in_frame(int rows, int cols) const {
        return num_nonzero_parts() <= rows && part(1) <= cols;
    }
    int num_nonzero_parts() const;

    /// Equality as partitions (trailing zeros ignored).
    friend bool operator==(const Partition& a, const Partition& b);
    friend bool operator<(const Partition& a, const Partition& b);

    std::string str() const;

private:
    std::vector<int> parts_;
};

/// Subset of {1..n} as a bitmask (bit j-1 <-> element j). Elements enumerate
/// in increasing order.
class Subset {
public:
    Subset() : n_(0), mask_(0) {}
    Subset(int n, std::uint64_t mask);
    static Subset empty(int n) { return Subset(n, 0); }
    static Subset full(int n) { return Subset(n, n == 64 ? ~0ull : (1ull << n) - 1); }
    static Subset of(int n, std::initializer_list<int> elems);

    int n() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    int size() const;
    bool contains(int j) const { return j >= 1 && j <= n_ && ((mask_ >> (j - 1)) & 1); }
    Subset with(int j) const { return Subset(n_, mask_ | (1ull << (j - 1))); }
    Subset without(int j) const { return Subset(n_, mask_ & ~(1ull << (j - 1))); }
    Subset complement() const { return Subset(n_, ~mask_ & Subset::full(n_).mask()); }
    std::vector<int> elements() const;

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.n_ == b.n_ && a.mask_ == b.mask_;
    }
    friend bool operator<(const Subset& a, const Subset& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.mask_ < b.mask_;
    }

    std::string str() const;

private:
    int n_;
    std::uint64_t mask_;
};

/// The partition lambda^A with |A| parts, part_{m+1-i} = A_i - i; fits the
/// |A| x (n-|A|) frame cut out by the lattice path of A.
Partition lambda_of(const Subset& A);

/// Inverse of lambda_of for partitions fitting the m x (n-m) frame.
Subset subset_of_partition(const Partition& lam, int m, int n);

/// (-1)^{|lambda^B|}; equals the sign of the permutation sorting B followed
/// by its complement.
int sign_w(const Subset& B);

/// All subsets of {1..n} with m elements, ascending by mask.
std::vector<Subset> subsets_of_size(int n, int m);

} // namespace qloop
