#include "plogic/iso.hpp"

#include "plogic/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace plogic {

namespace {

// Partitions relabelled into canonical order: cells carry new labels sorted
// ascending, cells within a partition and the partitions themselves are
// sorted lexicographically.
using Form = std::vector<std::vector<std::vector<int>>>;

struct LogicView {
    int n = 0;
    const std::vector<Partition>* partitions = nullptr;
    // cell_of[j][x] = index of the cell of partition j containing x
    std::vector<std::vector<int>> cell_of;
};

LogicView make_view(const PartitionLogic& pl) {
    LogicView v;
    v.n = static_cast<int>(pl.ground.size());
    v.partitions = &pl.partitions;
    v.cell_of.assign(pl.partitions.size(), std::vector<int>(v.n, -1));
    for (std::size_t j = 0; j < pl.partitions.size(); ++j)
        for (std::size_t c = 0; c < pl.partitions[j].size(); ++c)
            for (int x : pl.partitions[j][c]) v.cell_of[j][x] = static_cast<int>(c);
    return v;
}

int count_classes(const std::vector<int>& colors) {
    int m = 0;
    for (int c : colors) m = std::max(m, c + 1);
    return m;
}

// One-dimensional color refinement over the cell incidence structure. New
// colors are ranks of sorted signatures, so the result is invariant under
// relabelling of the input logic.
std::vector<int> refine(const LogicView& v, std::vector<int> colors) {
    // normalize incoming colors to ranks
    {
        std::map<int, int> rank;
        for (int c : colors) rank.emplace(c, 0);
        int next = 0;
        for (auto& [c, r] : rank) r = next++;
        for (int& c : colors) c = rank[c];
    }
    int classes = count_classes(colors);
    for (;;) {
        using Sig = std::pair<int, std::vector<std::vector<int>>>;
        std::vector<Sig> sig(v.n);
        for (int x = 0; x < v.n; ++x) {
            sig[x].first = colors[x];
            for (std::size_t j = 0; j < v.partitions->size(); ++j) {
                const Cell& cell = (*v.partitions)[j][v.cell_of[j][x]];
                std::vector<int> cell_colors;
                cell_colors.reserve(cell.size());
                for (int y : cell) cell_colors.push_back(colors[y]);
                std::sort(cell_colors.begin(), cell_colors.end());
                sig[x].second.push_back(std::move(cell_colors));
            }
            std::sort(sig[x].second.begin(), sig[x].second.end());
        }
        std::map<Sig, int> rank;
        for (int x = 0; x < v.n; ++x) rank.emplace(sig[x], 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (int x = 0; x < v.n; ++x) colors[x] = rank[sig[x]];
        if (next == classes) return colors;
        classes = next;
    }
}

Form build_form(const LogicView& v, const std::vector<int>& labels) {
    Form form;
    form.reserve(v.partitions->size());
    for (const auto& partition : *v.partitions) {
        std::vector<std::vector<int>> cells;
        cells.reserve(partition.size());
        for (const auto& cell : partition) {
            std::vector<int> mapped;
            mapped.reserve(cell.size());
            for (int x : cell) mapped.push_back(labels[x]);
            std::sort(mapped.begin(), mapped.end());
            cells.push_back(std::move(mapped));
        }
        std::sort(cells.begin(), cells.end());
        form.push_back(std::move(cells));
    }
    std::sort(form.begin(), form.end());
    return form;
}

// Individualization-refinement search for the minimal relabelled form.
struct CanonSearcher {
    const LogicView& view;
    long budget;
    long nodes = 0;
    bool have_best = false;
    Form best;
    std::vector<int> best_labels;

    CanonSearcher(const LogicView& v, long max_nodes) : view(v), budget(max_nodes) {}

    void search(const std::vector<int>& colors) {
        if (++nodes > budget)
            fail(Errc::size_limit_exceeded, "canonical labelling search exceeded node budget");
        int classes = count_classes(colors);
        if (classes == view.n) {
            Form form = build_form(view, colors);
            if (!have_best || form < best) {
                best = std::move(form);
                best_labels = colors;
                have_best = true;
            }
            return;
        }
        // first class (lowest color) with more than one member
        int target = -1;
        std::vector<int> size(classes, 0);
        for (int c : colors) ++size[c];
        for (int c = 0; c < classes; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        for (int e = 0; e < view.n; ++e) {
            if (colors[e] != target) continue;
            std::vector<int> split(view.n);
            for (int x = 0; x < view.n; ++x) split[x] = colors[x] * 2 + (x == e ? 0 : 1);
            search(refine(view, std::move(split)));
        }
    }
};

struct Canon {
    Form form;
    std::vector<int> labels;  // ground index -> canonical label
};

Canon canonicalize(const PartitionLogic& pl, const IsoLimits& limits) {
    if (static_cast<int>(pl.ground.size()) > limits.max_ground)
        fail(Errc::size_limit_exceeded, "ground set larger than limit");
    if (static_cast<int>(pl.partitions.size()) > limits.max_partitions)
        fail(Errc::size_limit_exceeded, "more partitions than limit");
    LogicView view = make_view(pl);
    if (view.n == 0) return {build_form(view, {}), {}};
    CanonSearcher searcher(view, limits.max_nodes);
    searcher.search(refine(view, std::vector<int>(view.n, 0)));
    return {std::move(searcher.best), std::move(searcher.best_labels)};
}

}  // namespace

bool verify_witness(const PartitionLogic& a, const PartitionLogic& b, const IsoWitness& w) {
    if (a.ground.size() != b.ground.size() || w.ground_map.size() != a.ground.size()) return false;
    if (a.partitions.size() != b.partitions.size() || w.partition_map.size() != a.partitions.size())
        return false;
    std::vector<bool> ground_hit(b.ground.size(), false);
    for (int g : w.ground_map) {
        if (g < 0 || static_cast<std::size_t>(g) >= b.ground.size() || ground_hit[g]) return false;
        ground_hit[g] = true;
    }
    std::vector<bool> part_hit(b.partitions.size(), false);
    for (int p : w.partition_map) {
        if (p < 0 || static_cast<std::size_t>(p) >= b.partitions.size() || part_hit[p]) return false;
        part_hit[p] = true;
    }
    for (std::size_t i = 0; i < a.partitions.size(); ++i) {
        Partition image;
        for (const auto& cell : a.partitions[i]) {
            Cell mapped;
            for (int x : cell) mapped.push_back(w.ground_map[x]);
            std::sort(mapped.begin(), mapped.end());
            image.push_back(std::move(mapped));
        }
        std::sort(image.begin(), image.end(),
                  [](const Cell& x, const Cell& y) { return x.front() < y.front(); });
        if (image != b.partitions[w.partition_map[i]]) return false;
    }
    return true;
}

std::optional<IsoWitness> logics_isomorphic(const PartitionLogic& a, const PartitionLogic& b,
                                            const IsoLimits& limits) {
    if (a.ground.size() != b.ground.size() || a.partitions.size() != b.partitions.size())
        return std::nullopt;
    auto shape = [](const PartitionLogic& pl) {
        std::vector<std::vector<int>> s;
        for (const auto& partition : pl.partitions) {
            std::vector<int> sizes;
            for (const auto& cell : partition) sizes.push_back(static_cast<int>(cell.size()));
            std::sort(sizes.begin(), sizes.end());
            s.push_back(std::move(sizes));
        }
        std::sort(s.begin(), s.end());
        return s;
    };
    if (shape(a) != shape(b)) return std::nullopt;

    Canon ca = canonicalize(a, limits);
    Canon cb = canonicalize(b, limits);
    if (ca.form != cb.form) return std::nullopt;

    IsoWitness w;
    std::vector<int> inverse_b(b.ground.size());
    for (std::size_t x = 0; x < b.ground.size(); ++x) inverse_b[cb.labels[x]] = static_cast<int>(x);
    w.ground_map.resize(a.ground.size());
    for (std::size_t x = 0; x < a.ground.size(); ++x) w.ground_map[x] = inverse_b[ca.labels[x]];

    for (std::size_t i = 0; i < a.partitions.size(); ++i) {
        Partition image;
        for (const auto& cell : a.partitions[i]) {
            Cell mapped;
            for (int x : cell) mapped.push_back(w.ground_map[x]);
            std::sort(mapped.begin(), mapped.end());
            image.push_back(std::move(mapped));
        }
        std::sort(image.begin(), image.end(),
                  [](const Cell& x, const Cell& y) { return x.front() < y.front(); });
        auto it = std::find(b.partitions.begin(), b.partitions.end(), image);
        if (it == b.partitions.end()) return std::nullopt;  // cannot happen when forms match
        w.partition_map.push_back(static_cast<int>(it - b.partitions.begin()));
    }
    if (!verify_witness(a, b, w)) return std::nullopt;
    return w;
}

std::string canonical_form(const PartitionLogic& pl, const IsoLimits& limits) {
    Canon canon = canonicalize(pl, limits);
    std::string out = std::to_string(pl.ground.size()) + ";" +
                      std::to_string(pl.partitions.size()) + ";";
    for (std::size_t j = 0; j < canon.form.size(); ++j) {
        if (j) out += ';';
        const auto& cells = canon.form[j];
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out += '|';
            for (std::size_t i = 0; i < cells[c].size(); ++i) {
                if (i) out += ',';
                out += std::to_string(cells[c][i]);
            }
        }
    }
    return out;
}

}  // namespace plogic
