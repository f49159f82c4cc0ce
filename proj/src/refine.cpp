#include "multipede/refine.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "multipede/errors.hpp"

namespace multipede {

namespace {

// Decode a tuple index into k element ids over a structure of n elements.
void decode(int64_t idx, int k, int n, std::vector<int>& out) {
    out.resize(k);
    for (int i = 0; i < k; ++i) {
        out[i] = static_cast<int>(idx % n);
        idx /= n;
    }
}

// Atomic type of a k-tuple: equality pattern, sorts, and membership of
// every index combination in every relation.
std::vector<int> atomic_signature(const RelStructure& s, const std::vector<int>& t) {
    int k = static_cast<int>(t.size());
    std::vector<int> sig;
    for (int i = 0; i < k; ++i) sig.push_back(s.sort[t[i]]);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) sig.push_back(t[i] == t[j]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            sig.push_back(s.has_pair(s.foot_of, t[i], t[j]));
            sig.push_back(s.has_pair(s.less, t[i], t[j]));
            sig.push_back(s.has_pair(s.member, t[i], t[j]));
        }
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            for (int l = j; l < k; ++l) sig.push_back(s.has_triple(t[i], t[j], t[l]));
    return sig;
}

}  // namespace

bool ck_equivalent(const RelStructure& a, const RelStructure& b, int k, int max_size) {
    if (k < 1) throw InputError("ck_equivalent: k must be >= 1");
    if (a.size() > max_size || b.size() > max_size)
        throw CapacityError("ck_equivalent: structure exceeds max_size");
    int na = a.size(), nb = b.size();
    if (na == 0 || nb == 0) return na == nb;
    int64_t ta = 1, tb = 1;
    for (int i = 0; i < k; ++i) {
        ta *= na;
        tb *= nb;
        if (ta > 20'000'000 || tb > 20'000'000)
            throw CapacityError("ck_equivalent: tuple space too large for this k");
    }

    // Joint initial coloring by atomic type.
    std::vector<int> ca(ta), cb(tb);
    {
        std::map<std::vector<int>, int> ids;
        std::vector<int> t;
        for (int64_t i = 0; i < ta; ++i) {
            decode(i, k, na, t);
            auto sig = atomic_signature(a, t);
            ca[i] = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
        }
        for (int64_t i = 0; i < tb; ++i) {
            decode(i, k, nb, t);
            auto sig = atomic_signature(b, t);
            cb[i] = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
        }
    }

    int64_t stride_pow[64];
    // idx with position p replaced by u: idx - t[p]*n^p + u*n^p.

    size_t colors = 0;
    for (;;) {
        std::map<std::vector<int>, int> ids;
        auto refine = [&](const std::vector<int>& c, int n, int64_t total,
                          std::vector<int>& out) {
            stride_pow[0] = 1;
            for (int p = 1; p < k; ++p) stride_pow[p] = stride_pow[p - 1] * n;
            std::vector<int> t, sig, bucket;
            out.resize(total);
            for (int64_t i = 0; i < total; ++i) {
                decode(i, k, n, t);
                sig.clear();
                sig.push_back(c[i]);
                for (int p = 0; p < k; ++p) {
                    bucket.clear();
                    int64_t base = i - static_cast<int64_t>(t[p]) * stride_pow[p];
                    for (int u = 0; u < n; ++u)
                        bucket.push_back(c[base + static_cast<int64_t>(u) * stride_pow[p]]);
                    std::sort(bucket.begin(), bucket.end());
                    sig.push_back(-1);  // position separator
                    sig.insert(sig.end(), bucket.begin(), bucket.end());
                }
                out[i] = ids.emplace(sig, static_cast<int>(ids.size())).first->second;
            }
        };
        std::vector<int> nca, ncb;
        refine(ca, na, ta, nca);
        refine(cb, nb, tb, ncb);
        ca = std::move(nca);
        cb = std::move(ncb);
        if (ids.size() == colors) break;  // partition stable
        colors = ids.size();
    }

    std::vector<int> ma = ca, mb = cb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    return ma == mb;
}

}  // namespace multipede
