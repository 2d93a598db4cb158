#include "bipdom/domset.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "bipdom/error.hpp"

namespace bipdom {

namespace {

using Word = Bitset::Word;

/// Branch-and-bound over dominator choices.
///
/// Each node picks the undominated vertex with the fewest remaining
/// candidate dominators and branches on them in index order; sibling i
/// excludes the candidates of siblings 0..i-1, so every set is generated
/// at most once. Pruning uses the larger of a max-coverage bound and a
/// disjoint-candidate packing bound.
class Search {
public:
    enum class Goal { Minimize, FindOne, EnumerateAll };

    Search(const Adjacency& adj, DominationMode mode)
        : n_(adj.size()), words_(Bitset::word_count(adj.size())), cover_(n_ * words_, 0) {
        for (std::size_t v = 0; v < n_; ++v) {
            const auto& row = adj.row(v).words();
            std::copy(row.begin(), row.end(), cover_.begin() + static_cast<std::ptrdiff_t>(v * words_));
            if (mode == DominationMode::Standard) cover(v)[v / 64] |= Word{1} << (v % 64);
        }
        stack_.assign((n_ + 2) * 2 * words_, 0);
    }

    /// Runs the search for sets of size <= limit. For Minimize the limit
    /// tightens with every improvement.
    void run(Goal goal, std::size_t limit, std::size_t cap = std::numeric_limits<std::size_t>::max()) {
        goal_ = goal;
        limit_ = limit;
        cap_ = cap;
        stop_ = false;
        Word* undominated = undominated_at(0);
        Word* allowed = allowed_at(0);
        std::fill(undominated, undominated + words_, 0);
        for (std::size_t v = 0; v < n_; ++v) undominated[v / 64] |= Word{1} << (v % 64);
        std::copy(undominated, undominated + words_, allowed);
        chosen_.clear();
        dfs(0);
    }

    const std::vector<std::vector<std::size_t>>& solutions() const { return solutions_; }
    std::size_t limit() const { return limit_; }

private:
    Word* cover(std::size_t v) { return cover_.data() + v * words_; }
    Word* undominated_at(std::size_t depth) { return stack_.data() + depth * 2 * words_; }
    Word* allowed_at(std::size_t depth) { return stack_.data() + (depth * 2 + 1) * words_; }

    std::size_t popcount_and(const Word* a, const Word* b) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
        return c;
    }

    void record() {
        switch (goal_) {
        case Goal::Minimize:
            solutions_.assign(1, chosen_);
            if (chosen_.empty()) stop_ = true;
            else limit_ = chosen_.size() - 1;
            break;
        case Goal::FindOne:
            solutions_.assign(1, chosen_);
            stop_ = true;
            break;
        case Goal::EnumerateAll:
            if (solutions_.size() >= cap_)
                throw Error(ErrorCode::BudgetExceeded,
                            "more than " + std::to_string(cap_) + " minimum sets; raise the enumeration cap");
            solutions_.push_back(chosen_);
            break;
        }
    }

    void dfs(std::size_t depth) {
        Word* undominated = undominated_at(depth);
        Word* allowed = allowed_at(depth);

        std::size_t remaining = 0;
        for (std::size_t i = 0; i < words_; ++i) remaining += static_cast<std::size_t>(std::popcount(undominated[i]));
        if (remaining == 0) {
            record();
            return;
        }
        if (chosen_.size() >= limit_) return;
        const std::size_t budget = limit_ - chosen_.size();

        // Branch vertex: fewest allowed dominators; ties to the lowest index.
        std::size_t branch_vertex = n_;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (std::size_t wi = 0; wi < words_; ++wi) {
            Word w = undominated[wi];
            while (w) {
                std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                std::size_t c = popcount_and(cover(v), allowed);
                if (c == 0) return;
                if (c < fewest) {
                    fewest = c;
                    branch_vertex = v;
                }
            }
        }

        std::size_t max_cover = 0;
        for (std::size_t wi = 0; wi < words_; ++wi) {
            Word w = allowed[wi];
            while (w) {
                std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                max_cover = std::max(max_cover, popcount_and(cover(v), undominated));
            }
        }
        if (max_cover == 0 || (remaining + max_cover - 1) / max_cover > budget) return;

        // Packing bound: undominated vertices with pairwise disjoint candidate sets need distinct picks.
        {
            std::vector<Word> used(words_, 0);
            std::size_t packed = 0;
            for (std::size_t wi = 0; wi < words_ && packed <= budget; ++wi) {
                Word w = undominated[wi];
                while (w) {
                    std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
                    w &= w - 1;
                    const Word* cv = cover(v);
                    bool disjoint = true;
                    for (std::size_t i = 0; i < words_; ++i)
                        if (cv[i] & allowed[i] & used[i]) {
                            disjoint = false;
                            break;
                        }
                    if (!disjoint) continue;
                    for (std::size_t i = 0; i < words_; ++i) used[i] |= cv[i] & allowed[i];
                    if (++packed > budget) return;
                }
            }
        }

        std::vector<std::size_t> candidates;
        candidates.reserve(fewest);
        {
            const Word* cv = cover(branch_vertex);
            for (std::size_t wi = 0; wi < words_; ++wi) {
                Word w = cv[wi] & allowed[wi];
                while (w) {
                    candidates.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                    w &= w - 1;
                }
            }
        }

        Word* next_undominated = undominated_at(depth + 1);
        Word* next_allowed = allowed_at(depth + 1);
        for (std::size_t w : candidates) {
            if (chosen_.size() >= limit_) return;
            const Word* cw = cover(w);
            for (std::size_t i = 0; i < words_; ++i) {
                next_undominated[i] = undominated[i] & ~cw[i];
                next_allowed[i] = allowed[i];
            }
            next_allowed[w / 64] &= ~(Word{1} << (w % 64));
            chosen_.push_back(w);
            dfs(depth + 1);
            chosen_.pop_back();
            if (stop_) return;
            allowed[w / 64] &= ~(Word{1} << (w % 64));
        }
    }

    std::size_t n_;
    std::size_t words_;
    std::vector<Word> cover_;
    std::vector<Word> stack_;
    std::vector<std::size_t> chosen_;
    std::vector<std::vector<std::size_t>> solutions_;
    Goal goal_ = Goal::Minimize;
    std::size_t limit_ = 0;
    std::size_t cap_ = 0;
    bool stop_ = false;
};

Bitset cover_of(const Adjacency& adj, DominationMode mode, std::size_t v) {
    Bitset c = adj.row(v);
    if (mode == DominationMode::Standard) c.set(v);
    return c;
}

/// Max-coverage greedy; ties to the lowest index. Returns nullopt if some
/// vertex cannot be dominated at all (Total mode, isolated vertex).
std::optional<Bitset> greedy_set(const Adjacency& adj, DominationMode mode) {
    const std::size_t n = adj.size();
    Bitset undominated(n);
    undominated.set_all();
    Bitset chosen(n);
    while (undominated.any()) {
        std::size_t best = n;
        std::size_t best_gain = 0;
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t gain = (cover_of(adj, mode, v) & undominated).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        if (best == n) return std::nullopt;
        chosen.set(best);
        undominated.subtract(cover_of(adj, mode, best));
    }
    return chosen;
}

Bitset to_bitset(std::size_t n, const std::vector<std::size_t>& indices) {
    Bitset s(n);
    for (auto i : indices) s.set(i);
    return s;
}

void require_no_isolated(const Graph& g) {
    auto iso = isolated_vertices(g);
    if (!iso.empty())
        throw Error(ErrorCode::IsolatedVertex, "total domination undefined: vertex " + iso.front() + " is isolated");
}

} // namespace

bool dominates(const Adjacency& adj, DominationMode mode, const Bitset& set) {
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (mode == DominationMode::Standard && set.test(v)) continue;
        if (!adj.row(v).intersects(set)) return false;
    }
    return true;
}

IndexDomResult minimum_dominating_set(const Adjacency& adj, DominationMode mode) {
    auto greedy = greedy_set(adj, mode);
    if (!greedy) throw Error(ErrorCode::IsolatedVertex, "total domination undefined for a graph with an isolated vertex");
    const std::size_t upper = greedy->count();
    if (upper == 0) return {0, *greedy};
    Search search(adj, mode);
    search.run(Search::Goal::Minimize, upper - 1);
    if (search.solutions().empty()) return {upper, *greedy};
    const auto& best = search.solutions().front();
    return {best.size(), to_bitset(adj.size(), best)};
}

std::optional<Bitset> find_dominating_set_within(const Adjacency& adj, DominationMode mode, std::size_t max_size) {
    Search search(adj, mode);
    search.run(Search::Goal::FindOne, max_size);
    if (search.solutions().empty()) return std::nullopt;
    return to_bitset(adj.size(), search.solutions().front());
}

std::vector<Bitset> enumerate_dominating_sets_within(const Adjacency& adj, DominationMode mode,
                                                      std::size_t max_size, std::size_t cap) {
    Search search(adj, mode);
    search.run(Search::Goal::EnumerateAll, max_size, cap);
    auto sets = search.solutions();
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    std::vector<Bitset> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(to_bitset(adj.size(), s));
    return out;
}

bool is_dominating_set(const Graph& g, std::span<const Label> set) {
    return dominates(g.adjacency(), DominationMode::Standard, g.to_bitset(set));
}

bool is_total_dominating_set(const Graph& g, std::span<const Label> set) {
    return dominates(g.adjacency(), DominationMode::Total, g.to_bitset(set));
}

DomResult domination_number(const Graph& g) {
    auto r = minimum_dominating_set(g.adjacency(), DominationMode::Standard);
    return {r.value, g.to_labels(r.witness)};
}

DomResult total_domination_number(const Graph& g) {
    require_no_isolated(g);
    auto r = minimum_dominating_set(g.adjacency(), DominationMode::Total);
    return {r.value, g.to_labels(r.witness)};
}

std::vector<VertexSet> enumerate_minimum_sets(const Graph& g, bool total, std::size_t cap) {
    const auto mode = total ? DominationMode::Total : DominationMode::Standard;
    if (total) require_no_isolated(g);
    const auto optimum = minimum_dominating_set(g.adjacency(), mode).value;
    std::vector<VertexSet> out;
    for (const auto& s : enumerate_dominating_sets_within(g.adjacency(), mode, optimum, cap))
        out.push_back(g.to_labels(s));
    return out;
}

} // namespace bipdom
