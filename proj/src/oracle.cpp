#include "arcstack/oracle.hpp"

#include <algorithm>
#include <map>

namespace arcstack {

FilterOracle::FilterOracle(OracleConfig cfg) : cfg_(cfg) {
    long n = 0;
    for (; n < cfg_.dense_prefix && n <= cfg_.horizon; ++n) universe_.push_back(n);
    // geometric tail: per_octave samples in each [2^k, 2^{k+1})
    long lo = cfg_.dense_prefix;
    while (lo <= cfg_.horizon) {
        long hi = lo * 2;
        for (int i = 0; i < cfg_.per_octave; ++i) {
            long v = lo + static_cast<long>((static_cast<double>(i) / cfg_.per_octave) * (hi - lo));
            if (v <= cfg_.horizon && (universe_.empty() || universe_.back() < v))
                universe_.push_back(v);
        }
        lo = hi;
    }
}

void FilterOracle::note(const std::string& label, std::size_t in, std::size_t out,
                        std::string choice) {
    log_.push_back({label, in, out, std::move(choice)});
}

Window FilterOracle::refine_partition(const std::string& label, const Window& a,
                                      const std::function<int(long)>& tag) {
    std::map<int, Window> classes;
    for (long n : a) classes[tag(n)].push_back(n);
    const Window* best = nullptr;
    int best_tag = 0;
    for (auto& [t, w] : classes) {
        if (!best || w.size() > best->size()) {
            best = &w;
            best_tag = t;
        }
    }
    if (!best || best->size() < cfg_.min_size)
        throw HorizonExhausted("no homogeneous class of size >= min_size at '" + label + "'");
    note(label, a.size(), best->size(), "tag=" + std::to_string(best_tag));
    return *best;
}

namespace {

bool is_constant(const Window& a, const std::function<Rat(long)>& value) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (value(a[i]) != value(a[0])) return false;
    return true;
}

bool strictly_monotone(const std::vector<Rat>& v) {
    if (v.size() < 2) return true;
    bool inc = true, dec = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) inc = false;
        if (!(v[i] < v[i - 1])) dec = false;
    }
    return inc || dec;
}

bool one_to_one(const std::vector<Rat>& v) {
    std::vector<Rat> s = v;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

// Leftmost longest subsequence under a strict pairwise order `lt`.
Window longest_chain(const Window& a, const std::vector<Rat>& v,
                     const std::function<bool(const Rat&, const Rat&)>& lt) {
    const std::size_t n = a.size();
    std::vector<std::size_t> f(n, 1);  // longest chain starting at i
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j)
            if (lt(v[i], v[j])) f[i] = std::max(f[i], 1 + f[j]);
    std::size_t len = 0;
    for (std::size_t i = 0; i < n; ++i) len = std::max(len, f[i]);
    Window out;
    std::size_t need = len;
    std::size_t prev = n;  // none
    for (std::size_t i = 0; i < n && need > 0; ++i) {
        if (f[i] == need && (prev == n || lt(v[prev], v[i]))) {
            out.push_back(a[i]);
            prev = i;
            --need;
        }
    }
    return out;
}

Window most_frequent_value(const Window& a, const std::vector<Rat>& v) {
    std::map<std::string, Window> groups;  // keyed by exact fraction string
    std::vector<std::string> order;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::string k = rat_str(v[i]);
        if (!groups.count(k)) order.push_back(k);
        groups[k].push_back(a[i]);
    }
    const Window* best = nullptr;
    for (auto& k : order) {  // leftmost-first tie break
        auto& w = groups[k];
        if (!best || w.size() > best->size()) best = &w;
    }
    return best ? *best : Window{};
}

}  // namespace

Window FilterOracle::refine_order(const std::string& label, const Window& a,
                                  const std::function<Rat(long)>& value, OrderMode mode) {
    std::vector<Rat> v;
    v.reserve(a.size());
    for (long n : a) v.push_back(value(n));

    if (is_constant(a, value) ||
        (mode == OrderMode::MonotoneOrConstant ? strictly_monotone(v) : one_to_one(v))) {
        note(label, a.size(), a.size(), "already-homogeneous");
        return a;
    }

    // First split by sign; alternating-sign sequences become monotone inside
    // one sign class far more often than under a raw chain search.
    bool mixed_sign = false;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (sgn(v[i]) != sgn(v[0])) mixed_sign = true;
    if (mixed_sign) {
        Window cls = refine_partition(label + "/sign", a, [&](long n) {
            int s = sgn(value(n));
            return s < 0 ? 0 : (s == 0 ? 1 : 2);
        });
        return refine_order(label, cls, value, mode);
    }

    Window best;
    std::string choice;
    if (mode == OrderMode::MonotoneOrConstant) {
        Window cst = most_frequent_value(a, v);
        Window inc = longest_chain(a, v, [](const Rat& x, const Rat& y) { return x < y; });
        Window dec = longest_chain(a, v, [](const Rat& x, const Rat& y) { return x > y; });
        best = cst;
        choice = "constant";
        if (inc.size() > best.size()) {
            best = inc;
            choice = "increasing";
        }
        if (dec.size() > best.size()) {
            best = dec;
            choice = "decreasing";
        }
    } else {
        Window cst = most_frequent_value(a, v);
        // first occurrences of each distinct value form a maximal 1-1 subsequence
        Window inj;
        std::vector<Rat> seen;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (std::find(seen.begin(), seen.end(), v[i]) == seen.end()) {
                seen.push_back(v[i]);
                inj.push_back(a[i]);
            }
        }
        best = cst;
        choice = "constant";
        if (inj.size() > best.size()) {
            best = inj;
            choice = "one-to-one";
        }
    }
    if (best.size() < cfg_.min_size)
        throw HorizonExhausted("no homogeneous order subset of size >= min_size at '" + label +
                               "'");
    note(label, a.size(), best.size(), choice);
    return best;
}

bool FilterOracle::often(const Window& w, const std::function<bool(long)>& pred) const {
    std::size_t yes = 0;
    for (long n : w)
        if (pred(n)) ++yes;
    return yes * 2 >= w.size();
}

Window window_filter(const Window& w, const std::function<bool(long)>& keep) {
    Window out;
    for (long n : w)
        if (keep(n)) out.push_back(n);
    return out;
}

bool window_contains(const Window& w, long n) {
    return std::binary_search(w.begin(), w.end(), n);
}

}  // namespace arcstack
