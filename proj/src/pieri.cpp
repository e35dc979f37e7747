#include "qloop/pieri.hpp"

namespace qloop {

namespace {

// rows processed top (i=1) to bottom; prev = lambda'_{i-1}
void vstrips(const std::vector<int>& lam, std::size_t i, int left, int prev,
             std::vector<int>& cur, std::vector<Partition>& out) {
    if (i == lam.size()) {
        if (left == 0) out.emplace_back(cur);
        return;
    }
    int base = lam[i];
    for (int add = 0; add <= 1; ++add) {
        if (add > left) break;
        int v = base + add;
        if (v > prev) continue;
        cur.push_back(v);
        vstrips(lam, i + 1, left - add, v, cur, out);
        cur.pop_back();
    }
}

void hstrips(const std::vector<int>& lam, std::size_t i, int left, int prevOld,
             std::vector<int>& cur, std::vector<Partition>& out) {
    if (i == lam.size()) {
        if (left == 0) out.emplace_back(cur);
        return;
    }
    int base = lam[i];
    int cap = std::min(prevOld - base, left); // interlacing: lambda'_i <= lambda_{i-1}
    for (int add = 0; add <= cap; ++add) {
        cur.push_back(base + add);
        hstrips(lam, i + 1, left - add, base, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> add_vertical_strips(const Partition& lam, int r, int maxPart) {
    std::vector<Partition> out;
    if (r < 0) return out;
    std::vector<int> cur;
    vstrips(lam.parts(), 0, r, maxPart, cur, out);
    return out;
}

std::vector<Partition> add_horizontal_strips(const Partition& lam, int r, int maxPart) {
    std::vector<Partition> out;
    if (r < 0) return out;
    std::vector<int> cur;
    hstrips(lam.parts(), 0, r, maxPart, cur, out);
    return out;
}

std::vector<Subset> pieri_e(const Subset& A, int r) {
    std::vector<Subset> out;
    int m = A.size(), n = A.n();
    for (const Partition& p : add_vertical_strips(lambda_of(A), r, n - m))
        out.push_back(subset_of_partition(p, m, n));
    return out;
}

std::vector<Subset> pieri_h(const Subset& A, int r) {
    std::vector<Subset> out;
    int m = A.size(), n = A.n();
    for (const Partition& p : add_horizontal_strips(lambda_of(A), r, n - m))
        out.push_back(subset_of_partition(p, m, n));
    return out;
}

} // namespace qloop
