#include "cycleideal/configs.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <unordered_map>

#include "cycleideal/determinant.hpp"

namespace cycleideal {

std::pair<ColoredPath, ColoredPath> gen_even_config(int m) {
    if (m < 4 || m % 2 != 0)
        fail(Error::Code::BadLength, "even configuration needs even m >= 4, got " +
                                         std::to_string(m));
    ColoredPath p, q;
    p.m = q.m = m;
    for (int i = 1; i <= m; ++i) {
        p.vertex_colors.push_back(i % 2 == 1 ? 0 : 1);
        q.vertex_colors.push_back(i % 2 == 1 ? 1 : 0);
    }
    for (int k = 1; k < m; ++k) {
        p.edge_colors.push_back(k - 1);  // pairwise distinct along the path
        q.edge_colors.push_back(k - 1);
    }
    return {p, q};
}

std::pair<ColoredPath, ColoredPath> gen_odd_config(int m) {
    if (m < 3 || m % 2 != 1)
        fail(Error::Code::BadLength, "odd configuration needs odd m >= 3, got " +
                                         std::to_string(m));
    ColoredPath p, q;
    p.m = q.m = m;
    for (int i = 1; i <= m; ++i) {
        int color = i % 2 == 1 ? 0 : i / 2;  // even positions pairwise distinct
        p.vertex_colors.push_back(color);
        q.vertex_colors.push_back(color);
    }
    for (int k = 1; k < m; ++k) {
        p.edge_colors.push_back(k % 2 == 1 ? 0 : 1);
        q.edge_colors.push_back(k % 2 == 1 ? 1 : 0);
    }
    return {p, q};
}

PairClass classify_pair(const ColoredPath& p, const ColoredPath& q) {
    if (p.m != q.m)
        fail(Error::Code::LengthMismatch, "paths have " + std::to_string(p.m) + " and " +
                                              std::to_string(q.m) + " vertices");
    if (p == q) return PairClass::Identical;
    if (q == reflect(p)) return PairClass::Reflection;
    if (det_path_disjoint(p) == det_path_disjoint(q)) return PairClass::EqualDetNontrivial;
    return PairClass::DifferentDet;
}

bool matches_even_config(const ColoredPath& p, const ColoredPath& q) {
    int m = p.m;
    if (q.m != m || m < 2 || m % 2 != 0) return false;
    if (p.edge_colors != q.edge_colors) return false;
    for (int i = 1; i <= m; ++i) {
        if (p.vcolor(i) != p.vcolor(i % 2 == 1 ? 1 : 2)) return false;
        if (q.vcolor(i) != q.vcolor(i % 2 == 1 ? 1 : 2)) return false;
    }
    return p.vcolor(1) == q.vcolor(2) && p.vcolor(2) == q.vcolor(1);
}

bool matches_odd_config(const ColoredPath& p, const ColoredPath& q) {
    int m = p.m;
    if (q.m != m || m < 3 || m % 2 != 1) return false;
    if (p.vertex_colors != q.vertex_colors) return false;
    for (int i = 3; i <= m; i += 2)
        if (p.vcolor(i) != p.vcolor(1)) return false;
    int c1 = p.ecolor(1);
    int c2 = p.ecolor(2);
    for (int k = 1; k < m; ++k) {
        if (p.ecolor(k) != (k % 2 == 1 ? c1 : c2)) return false;
        if (q.ecolor(k) != (k % 2 == 1 ? c2 : c1)) return false;
    }
    return true;
}

bool matches_known_config_up_to_reflection(const ColoredPath& p, const ColoredPath& q) {
    // Determinants are reflection invariant, so the configuration families
    // are closed under reflecting either path independently as well as
    // under swapping the pair.
    ColoredPath rp = reflect(p);
    ColoredPath rq = reflect(q);
    for (const auto& [x, y] :
         {std::pair(p, q), std::pair(q, p), std::pair(rp, q), std::pair(q, rp),
          std::pair(p, rq), std::pair(rq, p), std::pair(rp, rq), std::pair(rq, rp)})
        if (matches_even_config(x, y) || matches_odd_config(x, y)) return true;
    return false;
}

namespace {

ColoredPath path_from_digits(int m, const std::vector<int>& vdigits,
                             const std::vector<int>& edigits) {
    ColoredPath p;
    p.m = m;
    p.vertex_colors = vdigits;
    p.edge_colors = edigits;
    return p;
}

ColoredPath decode_path(std::uint64_t index, int m, int max_v, int max_e) {
    int edge_count = m - 1;
    std::vector<int> edigits(static_cast<std::size_t>(edge_count));
    for (int k = edge_count - 1; k >= 0; --k) {
        edigits[static_cast<std::size_t>(k)] = static_cast<int>(index % max_e);
        index /= static_cast<std::uint64_t>(max_e);
    }
    std::vector<int> vdigits(static_cast<std::size_t>(m));
    for (int k = m - 1; k >= 0; --k) {
        vdigits[static_cast<std::size_t>(k)] = static_cast<int>(index % max_v);
        index /= static_cast<std::uint64_t>(max_v);
    }
    return path_from_digits(m, vdigits, edigits);
}

// Joint first-occurrence renaming of both paths' colors, scanning P then Q.
std::pair<ColoredPath, ColoredPath> joint_canonical(const ColoredPath& p, const ColoredPath& q) {
    std::map<int, int> vmap, emap;
    auto rename = [](std::map<int, int>& table, const std::vector<int>& seq) {
        std::vector<int> out;
        out.reserve(seq.size());
        for (int c : seq) {
            auto [it, inserted] = table.emplace(c, static_cast<int>(table.size()));
            out.push_back(it->second);
        }
        return out;
    };
    ColoredPath cp = p, cq = q;
    cp.vertex_colors = rename(vmap, p.vertex_colors);
    cq.vertex_colors = rename(vmap, q.vertex_colors);
    cp.edge_colors = rename(emap, p.edge_colors);
    cq.edge_colors = rename(emap, q.edge_colors);
    return {cp, cq};
}

std::string pair_key(const std::pair<ColoredPath, ColoredPath>& pq) {
    std::string out = std::to_string(pq.first.m);
    for (const std::vector<int>* seq :
         {&pq.first.vertex_colors, &pq.second.vertex_colors, &pq.first.edge_colors,
          &pq.second.edge_colors}) {
        out += "|";
        for (std::size_t i = 0; i < seq->size(); ++i) {
            if (i) out += ",";
            out += std::to_string((*seq)[i]);
        }
    }
    return out;
}

}  // namespace

std::vector<PairSearchResult> exhaustive_pair_search(int m, int max_v, int max_e,
                                                     const PairSearchOptions& options) {
    if (m < 1 || max_v < 1 || max_e < 1)
        fail(Error::Code::BadLength, "pair search needs m, max_v, max_e >= 1");
    unsigned __int128 labeled = 1;
    const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 62;
    for (int k = 0; k < m && labeled < cap; ++k) labeled *= static_cast<unsigned>(max_v);
    for (int k = 0; k + 1 < m && labeled < cap; ++k) labeled *= static_cast<unsigned>(max_e);
    if (labeled >= cap || labeled * labeled > static_cast<unsigned __int128>(options.budget))
        fail(Error::Code::BudgetExceeded, "pair search space exceeds the configured budget");
    std::uint64_t total = static_cast<std::uint64_t>(labeled);

    // Phase 1: one determinant per labeled path, workers sharing an atomic
    // cursor; results land at fixed indices, so the merge is deterministic.
    std::vector<std::string> det_strings(total);
    int jobs = std::max(1, options.jobs);
    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t idx = begin; idx < end; ++idx)
            det_strings[idx] = det_path_disjoint(decode_path(idx, m, max_v, max_e)).str();
    };
    if (jobs == 1 || total < 1024) {
        worker(0, total);
    } else {
        std::atomic<std::uint64_t> cursor{0};
        const std::uint64_t chunk = 1024;
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back([&] {
                while (true) {
                    std::uint64_t begin = cursor.fetch_add(chunk);
                    if (begin >= total) return;
                    worker(begin, std::min(begin + chunk, total));
                }
            });
        for (std::thread& t : threads) t.join();
    }

    std::unordered_map<std::string, std::vector<std::uint64_t>> buckets;
    for (std::uint64_t idx = 0; idx < total; ++idx)
        buckets[det_strings[idx]].push_back(idx);

    std::map<std::string, PairSearchResult> found;
    for (const auto& [rendering, members] : buckets) {
        if (members.size() < 2) continue;
        for (std::size_t x = 0; x < members.size(); ++x) {
            ColoredPath px = decode_path(members[x], m, max_v, max_e);
            ColoredPath rx = reflect(px);
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                ColoredPath py = decode_path(members[y], m, max_v, max_e);
                if (py == rx) continue;  // reflections are the trivial equality
                auto ab = joint_canonical(px, py);
                auto ba = joint_canonical(py, px);
                std::string key_ab = pair_key(ab);
                std::string key_ba = pair_key(ba);
                if (key_ba < key_ab) {
                    found.emplace(std::move(key_ba), PairSearchResult{ba.first, ba.second});
                } else {
                    found.emplace(std::move(key_ab), PairSearchResult{ab.first, ab.second});
                }
            }
        }
    }

    std::vector<PairSearchResult> out;
    out.reserve(found.size());
    for (auto& [key, pair] : found) out.push_back(std::move(pair));
    return out;
}

}  // namespace cycleideal
