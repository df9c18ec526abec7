#include "scurve/census.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "scurve/common.hpp"
#include "scurve/curve.hpp"
#include "scurve/splice.hpp"

namespace scurve {
namespace {

constexpr int kMaxCensusN = 14;  // dart flags must fit a 64-bit mask

// Double occurrence words of length 2n in first-occurrence numbering whose
// repeat of crossing 0 sits at position q. Words are enumerated depth first,
// pruned so every completed prefix extends to a full word.
template <typename F>
void words_with_repeat_at(int n, int q, F&& fn) {
    std::vector<int> word(2 * n, -1);
    word[0] = 0;
    word[q] = 0;
    int next = 1;
    std::vector<int> open;  // crossings placed once, still unclosed
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == 2 * n) {
            fn(word);
            return;
        }
        if (pos == q) {
            self(self, pos + 1);
            return;
        }
        int slots = 2 * n - pos - (q > pos ? 1 : 0);
        int needed = static_cast<int>(open.size()) + 2 * (n - next);
        if (slots != needed) internal_error("word extension miscounted");
        if (next < n) {
            word[pos] = next;
            open.push_back(next);
            ++next;
            self(self, pos + 1);
            --next;
            open.pop_back();
        }
        for (std::size_t i = 0; i < open.size(); ++i) {
            int c = open[i];
            open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
            word[pos] = c;
            self(self, pos + 1);
            open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), c);
        }
        word[pos] = -1;
    };
    rec(rec, 1);
}

// For one word, run every sign vector with crossing 0 positive through a
// fast genus test and collect the canonical codes of the spherical ones.
void process_word(const std::vector<int>& word, bool reduced_only,
                  std::unordered_set<std::string>& out) {
    const int len = static_cast<int>(word.size());
    const int n = len / 2;
    std::array<std::array<int, 4>, kMaxCensusN> ends{};  // in1, out1, in2, out2
    std::array<int, kMaxCensusN> cnt{};
    for (int p = 0; p < len; ++p) {
        int c = word[p];
        int in = 2 * ((p + len - 1) % len) + 1;
        int outd = 2 * p;
        if (cnt[c] == 0) {
            ends[c][0] = in;
            ends[c][1] = outd;
        } else {
            ends[c][2] = in;
            ends[c][3] = outd;
        }
        ++cnt[c];
    }
    std::array<int, 4 * kMaxCensusN> sig{};
    for (std::uint32_t half = 0; half < (1u << (n - 1)); ++half) {
        const std::uint32_t mask = half << 1;
        for (int c = 0; c < n; ++c) {
            auto [i1, o1, i2, o2] = ends[c];
            if (mask >> c & 1) {
                sig[i1] = o2;
                sig[o2] = o1;
                sig[o1] = i2;
                sig[i2] = i1;
            } else {
                sig[i1] = i2;
                sig[i2] = o1;
                sig[o1] = o2;
                sig[o2] = i1;
            }
        }
        int fc = 0;
        std::uint64_t vis = 0;
        for (int d = 0; d < 2 * len; ++d) {
            if (vis >> d & 1) continue;
            ++fc;
            int e = d;
            do {
                vis |= 1ull << e;
                e = sig[e ^ 1];
            } while (e != d);
        }
        if (fc != n + 2) continue;
        std::vector<bool> neg(n);
        for (int c = 0; c < n; ++c) neg[c] = mask >> c & 1;
        CurveMap curve = CurveMap::from_word(word, neg);
        if (reduced_only && !is_reduced(curve)) continue;
        out.insert(curve.canonical());
    }
}

}  // namespace

CensusStore enumerate_curves(int max_n, bool reduced_only, int jobs) {
    check(max_n >= 0 && max_n <= kMaxCensusN, "crossing bound out of range");
    check(jobs >= 1, "job count must be positive");
    CensusStore store;
    store.max_n = max_n;
    store.reduced_only = reduced_only;
    store.codes.resize(max_n + 1);
    store.codes[0] = {std::string()};

    std::vector<std::pair<int, int>> items;  // (n, repeat position of crossing 0)
    for (int n = 1; n <= max_n; ++n)
        for (int q = 1; q < 2 * n; ++q) items.emplace_back(n, q);
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    std::vector<std::vector<std::unordered_set<std::string>>> found(
        workers, std::vector<std::unordered_set<std::string>>(max_n + 1));
    auto run = [&](int t) {
        for (std::size_t i = t; i < items.size(); i += workers) {
            auto [n, q] = items[i];
            words_with_repeat_at(n, q, [&](const std::vector<int>& word) {
                process_word(word, reduced_only, found[t][n]);
            });
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(run, t);
        for (std::thread& th : pool) th.join();
    }
    for (int n = 1; n <= max_n; ++n) {
        std::set<std::string> merged;
        for (int t = 0; t < workers; ++t)
            merged.insert(found[t][n].begin(), found[t][n].end());
        store.codes[n].assign(merged.begin(), merged.end());
    }
    return store;
}

std::vector<std::size_t> census_counts(const CensusStore& store) {
    std::vector<std::size_t> counts;
    for (const auto& block : store.codes) counts.push_back(block.size());
    return counts;
}

void save_census(const CensusStore& store, std::ostream& out) {
    out << "# census v1\n";
    out << "# filter=" << (store.reduced_only ? "reduced" : "all") << "\n";
    for (int n = 0; n <= store.max_n; ++n) {
        out << "# n=" << n << "\n";
        for (const std::string& code : store.codes[n]) out << code << "\n";
    }
}

void save_census(const CensusStore& store, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write census file: " + path);
    save_census(store, out);
    out.flush();
    if (!out) throw Error("cannot write census file: " + path);
}

CensusStore load_census(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open census file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "# census v1")
        throw ParseError("census file must start with '# census v1'");
    if (!std::getline(in, line) || line.rfind("# filter=", 0) != 0)
        throw ParseError("census file must declare its filter");
    CensusStore store;
    const std::string filter = line.substr(9);
    if (filter == "reduced")
        store.reduced_only = true;
    else if (filter != "all")
        throw ParseError("unknown census filter: " + filter);
    store.max_n = -1;
    while (std::getline(in, line)) {
        if (line.rfind("# n=", 0) == 0) {
            int n = 0;
            try {
                n = std::stoi(line.substr(4));
            } catch (const std::exception&) {
                throw ParseError("bad census section header: " + line);
            }
            if (n != store.max_n + 1) throw ParseError("census sections out of order");
            store.max_n = n;
            store.codes.emplace_back();
            continue;
        }
        if (!line.empty() && line[0] == '#') continue;
        if (store.max_n < 0) throw ParseError("census code before the first section");
        CurveMap curve = parse_signed_code(line);
        if (curve.crossings() != store.max_n)
            throw ParseError("census code in the wrong section: " + line);
        if (curve.canonical() != line)
            throw ParseError("census code is not canonical: " + line);
        std::vector<std::string>& block = store.codes.back();
        if (!block.empty() && !(block.back() < line))
            throw ParseError("census codes out of order: " + line);
        block.push_back(line);
    }
    if (store.max_n < 0) throw ParseError("census file has no sections");
    return store;
}

}  // namespace scurve
