#pragma once

// Small shared vocabulary: integer rows, permutations (1-based values),
// error types and the internal-check macro used across the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ppbij {

using Row = std::vector<int>;
using Rows = std::vector<Row>;
using Perm = std::vector<int>;  // perm[i] = image of i+1, values 1..k

// Malformed input: wrong support, bad encoding, violated precondition.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken invariant inside the machinery; always a defect, never user error.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

#define PPBIJ_CHECK(cond, msg)                                   \
    do {                                                         \
        if (!(cond)) throw ::ppbij::internal_error(              \
            std::string("check failed: ") + (msg) + " [" #cond "]"); \
    } while (0)

#define PPBIJ_REQUIRE(cond, msg)                                     \
    do {                                                             \
        if (!(cond)) throw ::ppbij::structural_error(msg);           \
    } while (0)

inline int perm_sign(const Perm& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv % 2 == 0) ? +1 : -1;
}

inline Perm perm_identity(int k) {
    Perm p(k);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = int(i) + 1;
    return q;
}

// (p ∘ q)(i) = p(q(i))
inline Perm perm_compose(const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i] - 1];
    return r;
}

inline bool is_perm(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 1 || v > int(p.size()) || seen[v - 1]) return false;
        seen[v - 1] = 1;
    }
    return true;
}

inline std::vector<Perm> all_perms(int k) {
    Perm p = perm_identity(k);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::string join_ints(const std::vector<int>& v, char sep = ',') {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::set<int> set_of(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Deterministic parallel map: results are gathered by task index regardless
// of scheduling. jobs <= 1 degrades to a plain loop.
template <typename F>
void parallel_for(int tasks, int jobs, F&& body) {
    if (jobs <= 1 || tasks <= 1) {
        for (int i = 0; i < tasks; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(jobs);
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < tasks; i += jobs) body(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace ppbij
