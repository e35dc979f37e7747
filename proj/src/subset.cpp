#include "qloop/subset.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qloop {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::domain_error("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::num_nonzero_parts() const {
    int k = 0;
    for (int p : parts_)
        if (p > 0) ++k;
    return k;
}

bool Partition::contains(const Partition& mu) const {
    int k = std::max(num_parts(), mu.num_parts());
    for (int i = 1; i <= k; ++i)
        if (part(i) < mu.part(i)) return false;
    return true;
}

bool operator==(const Partition& a, const Partition& b) {
    int k = std::max(a.num_parts(), b.num_parts());
    for (int i = 1; i <= k; ++i)
        if (a.part(i) != b.part(i)) return false;
    return true;
}

bool operator<(const Partition& a, const Partition& b) {
    int k = std::max(a.num_parts(), b.num_parts());
    for (int i = 1; i <= k; ++i) {
        if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
    }
    return false;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

Subset::Subset(int n, std::uint64_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > 64) throw std::domain_error("Subset: ambient size must be in [0,64]");
    if (n < 64 && (mask >> n) != 0) throw std::domain_error("Subset: mask exceeds ambient size");
}

Subset Subset::of(int n, std::initializer_list<int> elems) {
    std::uint64_t m = 0;
    for (int e : elems) {
        if (e < 1 || e > n) throw std::domain_error("Subset: element out of range");
        m |= 1ull << (e - 1);
    }
    return Subset(n, m);
}

int Subset::size() const { return std::popcount(mask_); }

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
        if (contains(j)) out.push_back(j);
    return out;
}

std::string Subset::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int j : elements()) {
        if (!first) os << ",";
        os << j;
        first = false;
    }
    os << "}";
    return os.str();
}

Partition lambda_of(const Subset& A) {
    auto elems = A.elements();
    int m = static_cast<int>(elems.size());
    std::vector<int> parts(static_cast<std::size_t>(m), 0);
    for (int i = 1; i <= m; ++i) parts[static_cast<std::size_t>(m - i)] = elems[static_cast<std::size_t>(i - 1)] - i;
    return Partition(std::move(parts));
}

Subset subset_of_partition(const Partition& lam, int m, int n) {
    if (lam.num_nonzero_parts() > m || lam.part(1) > n - m)
        throw std::domain_error("subset_of_partition: partition does not fit the frame");
    Subset A = Subset::empty(n);
    for (int i = 1; i <= m; ++i) {
        int e = lam.part(m + 1 - i) + i;
        A = A.with(e);
    }
    return A;
}

int sign_w(const Subset& B) { return lambda_of(B).weight() % 2 == 0 ? 1 : -1; }

std::vector<Subset> subsets_of_size(int n, int m) {
    std::vector<Subset> out;
    if (m < 0 || m > n) return out;
    std::uint64_t full = Subset::full(n).mask();
    for (std::uint64_t mask = 0;; ++mask) {
        if (mask > full) break;
        if (std::popcount(mask) == m) out.emplace_back(n, mask);
        if (mask == full) break;
    }
    return out;
}

} // namespace qloop
