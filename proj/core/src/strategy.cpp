/*
 * Copyright 2026 The muller-hurry Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "muller/strategy.hpp"

#include <stdexcept>

#include "muller/errors.hpp"

namespace muller {

namespace {

std::string prefix_text(std::span<const VertexId> prefix)
{
    std::string s;
    for (VertexId v : prefix) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

} // namespace

Strategy::Strategy(std::shared_ptr<const Arena> arena, Player player, VertexSet domain, std::string name,
                   bool finite_memory, CursorFactory factory)
    : arena_(std::move(arena)), player_(player), domain_(domain), name_(std::move(name)),
      finite_memory_(finite_memory), factory_(std::move(factory))
{
    if (!arena_) throw std::invalid_argument("strategy needs an arena");
}

std::unique_ptr<StrategyCursor> Strategy::start() const
{
    return factory_();
}

VertexId Strategy::move(const StrategyCursor& cursor, std::span<const VertexId> prefix) const
{
    const std::vector<VertexId> copy(prefix.begin(), prefix.end());
    if (prefix.empty()) throw StrategyOffDomain(name_ + ": empty prefix", copy);
    const VertexId v = prefix.back();
    if (v >= arena_->size() || arena_->owner(v) != player_)
        throw StrategyOffDomain(name_ + ": vertex " + std::to_string(v) + " is not owned by player " +
                                    std::to_string(index_of(player_)),
                                copy);
    if (!domain_.contains(v))
        throw StrategyOffDomain(name_ + ": vertex " + std::to_string(v) + " is outside the domain " +
                                    domain_.to_string() + " (prefix " + prefix_text(prefix) + ")",
                                copy);
    VertexId next = 0;
    try {
        next = cursor.move();
    } catch (const OffDomain& e) {
        throw StrategyOffDomain(name_ + ": " + e.what() + " (prefix " + prefix_text(prefix) + ")", copy);
    }
    if (!arena_->has_edge(v, next))
        throw std::logic_error(name_ + " proposed the non-edge " + std::to_string(v) + "->" +
                               std::to_string(next));
    return next;
}

VertexId Strategy::operator()(std::span<const VertexId> prefix) const
{
    auto cursor = start();
    for (VertexId v : prefix) cursor->push(v);
    return move(*cursor, prefix);
}

namespace {

class PositionalCursor final : public StrategyCursor
{
public:
    explicit PositionalCursor(std::shared_ptr<const std::vector<std::optional<VertexId>>> choice)
        : choice_(std::move(choice)) {}

    void push(VertexId v) override { last_ = v; }
    VertexId move() const override
    {
        if (!last_ || *last_ >= choice_->size() || !(*choice_)[*last_])
            throw OffDomain("no positional choice at this vertex");
        return *(*choice_)[*last_];
    }
    std::optional<std::string> memory() const override { return std::string("P"); }
    std::unique_ptr<StrategyCursor> clone() const override { return std::make_unique<PositionalCursor>(*this); }

private:
    std::shared_ptr<const std::vector<std::optional<VertexId>>> choice_;
    std::optional<VertexId> last_;
};

class RandomCursor final : public StrategyCursor
{
public:
    RandomCursor(std::shared_ptr<const Arena> arena, std::uint64_t seed) : arena_(std::move(arena)), h_(mix(seed)) {}

    void push(VertexId v) override
    {
        last_ = v;
        h_ = mix(h_ ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t{v} + 1)));
    }
    VertexId move() const override
    {
        if (!last_) throw OffDomain("empty prefix");
        const auto succ = arena_->successors(*last_);
        return succ[h_ % succ.size()];
    }
    std::optional<std::string> memory() const override { return std::nullopt; }
    std::unique_ptr<StrategyCursor> clone() const override { return std::make_unique<RandomCursor>(*this); }

private:
    // splitmix64 finaliser
    static std::uint64_t mix(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::shared_ptr<const Arena> arena_;
    std::uint64_t h_;
    std::optional<VertexId> last_;
};

} // namespace

Strategy positional_strategy(std::shared_ptr<const Arena> arena, Player player,
                             std::vector<std::optional<VertexId>> choice, std::string name)
{
    VertexSet domain;
    for (VertexId v = 0; v < choice.size(); ++v) {
        if (!choice[v]) continue;
        if (v >= arena->size() || !arena->has_edge(v, *choice[v]))
            throw std::invalid_argument("positional choice at " + std::to_string(v) + " is not an edge");
        domain.insert(v);
    }
    auto shared = std::make_shared<const std::vector<std::optional<VertexId>>>(std::move(choice));
    return Strategy(std::move(arena), player, domain, std::move(name), true,
                    [shared] { return std::make_unique<PositionalCursor>(shared); });
}

Strategy attractor_strategy(std::shared_ptr<const Arena> arena, const AttractorResult& res)
{
    return positional_strategy(std::move(arena), res.player, res.strategy, "attractor");
}

Strategy first_successor_strategy(std::shared_ptr<const Arena> arena, Player player)
{
    std::vector<std::optional<VertexId>> choice(arena->size());
    for (VertexId v : arena->owned_by(player)) choice[v] = arena->successors(v).front();
    return positional_strategy(std::move(arena), player, std::move(choice), "first");
}

Strategy random_strategy(std::shared_ptr<const Arena> arena, Player player, std::uint64_t seed)
{
    const VertexSet domain = arena->vertices();
    return Strategy(arena, player, domain, "random", false,
                    [arena, seed] { return std::make_unique<RandomCursor>(arena, seed); });
}

namespace {

enum class Mode { Bounding, Naive };

VertexId smallest_successor_in(const Arena& arena, VertexId v, VertexSet region)
{
    const VertexSet s = arena.successor_set(v) & region;
    if (s.empty())
        throw OffDomain("vertex " + std::to_string(v) + " has no successor in " + region.to_string());
    return s.front();
}

/// Strategy of one player on one decomposition node. The fed history always
/// stays inside that player's region of the node.
class Node
{
public:
    virtual ~Node() = default;
    virtual void push(VertexId v) = 0;
    virtual VertexId move() const = 0;
    virtual std::string memory() const = 0;
    virtual std::unique_ptr<Node> clone() const = 0;
};

std::unique_ptr<Node> make_node(const Arena* arena, const Decomposition* d, Player p, Mode mode);

std::unique_ptr<Node> clone_of(const std::unique_ptr<Node>& n)
{
    return n ? n->clone() : nullptr;
}

class OffNode final : public Node
{
public:
    void push(VertexId) override {}
    VertexId move() const override { throw OffDomain("empty region"); }
    std::string memory() const override { return "0"; }
    std::unique_ptr<Node> clone() const override { return std::make_unique<OffNode>(); }
};

class LeafNode final : public Node
{
public:
    LeafNode(const Arena* arena, const Decomposition* d) : arena_(arena), d_(d) {}

    void push(VertexId v) override { last_ = v; }
    VertexId move() const override { return smallest_successor_in(*arena_, last_, d_->vertices); }
    std::string memory() const override { return "L"; }
    std::unique_ptr<Node> clone() const override { return std::make_unique<LeafNode>(*this); }

private:
    const Arena* arena_;
    const Decomposition* d_;
    VertexId last_ = 0;
};

/// τ*: child selection by the opponent's indicator.
class TauNode final : public Node
{
public:
    TauNode(const Arena* arena, const Decomposition* d)
        : arena_(arena), d_(d), i_(d->root_owner), rounds_(d->final_rounds()), subs_(rounds_.size())
    {
    }

    TauNode(const TauNode& o)
        : arena_(o.arena_), d_(o.d_), i_(o.i_), rounds_(o.rounds_), chain_(o.chain_), c_(o.c_), last_(o.last_)
    {
        subs_.reserve(o.subs_.size());
        for (const auto& s : o.subs_) subs_.push_back(clone_of(s));
    }

    void push(VertexId v) override
    {
        last_ = v;
        if (chain_)
            chain_->extend(v);
        else
            chain_.emplace(v);

        const bool keep = c_ && rounds_[*c_].tree->label.contains(v);
        if (!keep) {
            const std::size_t k = rounds_.size();
            std::optional<std::size_t> by_vertex;
            for (std::size_t j = 0; j < k && !by_vertex; ++j)
                if (rounds_[j].tree->label.contains(v)) by_vertex = j;
            if (!by_vertex) {
                c_.reset();
            } else {
                const ZielonkaTree* tree = d_->tree.get();
                const Player opp = opponent(i_);
                const VertexSet ind = chain_->indicator(
                    [tree, opp](VertexSet s) { return !s.empty() && tree->membership(s) == opp; },
                    tree->label);
                if (ind.empty()) {
                    c_ = by_vertex;
                } else {
                    c_.reset();
                    for (std::size_t j = 0; j < k && !c_; ++j)
                        if (ind.subset_of(rounds_[j].tree->label)) c_ = j;
                    if (!c_) throw std::logic_error("indicator " + ind.to_string() + " fits no child");
                }
            }
        }

        for (std::size_t j = 0; j < rounds_.size(); ++j) {
            if (rounds_[j].sub_region(i_).contains(v)) {
                if (!subs_[j]) subs_[j] = make_node(arena_, rounds_[j].sub.get(), i_, Mode::Bounding);
                subs_[j]->push(v);
            } else {
                subs_[j].reset();
            }
        }
    }

    VertexId move() const override
    {
        const VertexSet region = d_->region(i_);
        if (!c_) return smallest_successor_in(*arena_, last_, region);
        const std::size_t j = *c_;
        if (subs_[j]) return subs_[j]->move();
        if (const auto s = rounds_[j].escape.strategy[last_]) return *s;
        return smallest_successor_in(*arena_, last_, region);
    }

    std::string memory() const override
    {
        std::string m = "T" + (c_ ? std::to_string(*c_) : std::string("_")) + "[" + chain_->shape_key() + "]";
        for (const auto& s : subs_) m += "(" + (s ? s->memory() : std::string()) + ")";
        return m;
    }

    std::unique_ptr<Node> clone() const override { return std::make_unique<TauNode>(*this); }

    /// Index into d.rounds of the current child, or nullopt for ⊥.
    ChildChoice current() const
    {
        if (!c_) return std::nullopt;
        return d_->rounds.size() - rounds_.size() + *c_;
    }

private:
    const Arena* arena_;
    const Decomposition* d_;
    Player i_;
    std::span<const RoundRecord> rounds_;
    std::optional<ScoreChain> chain_;
    std::optional<std::size_t> c_;
    std::vector<std::unique_ptr<Node>> subs_;
    VertexId last_ = 0;
};

/// Zielonka's cyclic counter. c = j means round n - j of the final rounds.
class NaiveTauNode final : public Node
{
public:
    NaiveTauNode(const Arena* arena, const Decomposition* d)
        : arena_(arena), d_(d), i_(d->root_owner), rounds_(d->final_rounds())
    {
    }

    NaiveTauNode(const NaiveTauNode& o)
        : arena_(o.arena_), d_(o.d_), i_(o.i_), rounds_(o.rounds_), c_(o.c_), outside_(o.outside_),
          sub_(clone_of(o.sub_)), last_(o.last_)
    {
    }

    void push(VertexId v) override
    {
        last_ = v;
        const std::size_t k = rounds_.size();
        if (!round().tree->label.contains(v)) {
            // The target V \ lbl(T) is reached: move on to the next child,
            // skipping children whose target is already hit.
            std::size_t next = c_;
            bool found = false;
            for (std::size_t t = 0; t < k && !found; ++t) {
                next = (next + 1) % k;
                found = rounds_[k - 1 - next].tree->label.contains(v);
            }
            outside_ = !found;
            if (found) c_ = next;
            sub_.reset();
        } else {
            outside_ = false;
        }
        if (!outside_ && round().sub_region(i_).contains(v)) {
            if (!sub_) sub_ = make_node(arena_, round().sub.get(), i_, Mode::Naive);
            sub_->push(v);
        } else {
            sub_.reset();
        }
    }

    VertexId move() const override
    {
        const VertexSet region = d_->region(i_);
        if (outside_) return smallest_successor_in(*arena_, last_, region);
        if (sub_) return sub_->move();
        if (const auto s = round().escape.strategy[last_]) return *s;
        return smallest_successor_in(*arena_, last_, region);
    }

    std::string memory() const override
    {
        return "N" + std::to_string(c_) + (outside_ ? "o" : "") + "(" + (sub_ ? sub_->memory() : "") + ")";
    }

    std::unique_ptr<Node> clone() const override { return std::make_unique<NaiveTauNode>(*this); }

private:
    const RoundRecord& round() const { return rounds_[rounds_.size() - 1 - c_]; }

    const Arena* arena_;
    const Decomposition* d_;
    Player i_;
    std::span<const RoundRecord> rounds_;
    std::size_t c_ = 0;
    bool outside_ = false;
    std::unique_ptr<Node> sub_;
    VertexId last_ = 0;
};

/// σ*: attractor moves on A_m \ U_{m-1}, recursion on W^m of the node's loser.
class SigmaNode final : public Node
{
public:
    SigmaNode(const Arena* arena, const Decomposition* d, Mode mode)
        : arena_(arena), d_(d), loser_(opponent(d->root_owner)), mode_(mode)
    {
    }

    SigmaNode(const SigmaNode& o)
        : arena_(o.arena_), d_(o.d_), loser_(o.loser_), mode_(o.mode_), m_(o.m_), sub_(clone_of(o.sub_)),
          last_(o.last_)
    {
    }

    void push(VertexId v) override
    {
        last_ = v;
        const std::size_t r = d_->round_of_loser_vertex(v);
        const RoundRecord& round = d_->rounds[r];
        if (round.sub_region(loser_).contains(v)) {
            if (!sub_ || m_ != r) {
                sub_ = make_node(arena_, round.sub.get(), loser_, mode_);
                m_ = r;
            }
            sub_->push(v);
        } else {
            sub_.reset();
            m_.reset();
        }
    }

    VertexId move() const override
    {
        if (sub_) return sub_->move();
        const std::size_t r = d_->round_of_loser_vertex(last_);
        if (const auto s = d_->rounds[r].opponent_attractor.strategy[last_]) return *s;
        throw OffDomain("no attractor move at vertex " + std::to_string(last_));
    }

    std::string memory() const override
    {
        return "S" + (m_ ? std::to_string(*m_) : std::string("_")) + "(" + (sub_ ? sub_->memory() : "") + ")";
    }

    std::unique_ptr<Node> clone() const override { return std::make_unique<SigmaNode>(*this); }

private:
    const Arena* arena_;
    const Decomposition* d_;
    Player loser_;
    Mode mode_;
    std::optional<std::size_t> m_;
    std::unique_ptr<Node> sub_;
    VertexId last_ = 0;
};

std::unique_ptr<Node> make_node(const Arena* arena, const Decomposition* d, Player p, Mode mode)
{
    if (d->region(p).empty()) return std::make_unique<OffNode>();
    if (d->is_leaf()) return std::make_unique<LeafNode>(arena, d);
    if (p == d->root_owner) {
        if (mode == Mode::Naive) return std::make_unique<NaiveTauNode>(arena, d);
        return std::make_unique<TauNode>(arena, d);
    }
    return std::make_unique<SigmaNode>(arena, d, mode);
}

/// Feeds the node the longest suffix of the play inside the player's region.
class RegionCursor final : public StrategyCursor
{
public:
    RegionCursor(std::shared_ptr<const Arena> arena, std::shared_ptr<const Decomposition> d, Player p, Mode mode)
        : arena_(std::move(arena)), d_(std::move(d)), p_(p), mode_(mode), region_(d_->region(p))
    {
    }

    RegionCursor(const RegionCursor& o)
        : arena_(o.arena_), d_(o.d_), p_(o.p_), mode_(o.mode_), region_(o.region_), node_(clone_of(o.node_))
    {
    }

    void push(VertexId v) override
    {
        if (!region_.contains(v)) {
            node_.reset();
            return;
        }
        if (!node_) node_ = make_node(arena_.get(), d_.get(), p_, mode_);
        node_->push(v);
    }

    VertexId move() const override
    {
        if (!node_) throw OffDomain("current vertex is outside the winning region " + region_.to_string());
        return node_->move();
    }

    std::optional<std::string> memory() const override { return node_ ? node_->memory() : std::string("-"); }

    std::unique_ptr<StrategyCursor> clone() const override { return std::make_unique<RegionCursor>(*this); }

private:
    std::shared_ptr<const Arena> arena_;
    std::shared_ptr<const Decomposition> d_;
    Player p_;
    Mode mode_;
    VertexSet region_;
    std::unique_ptr<Node> node_;
};

Strategy region_strategy(std::shared_ptr<const Arena> arena, std::shared_ptr<const Decomposition> d, Player p,
                         Mode mode, std::string name)
{
    if (!d) throw std::invalid_argument("strategy needs a decomposition");
    const VertexSet region = d->region(p);
    return Strategy(arena, p, region, std::move(name), true,
                    [arena, d, p, mode] { return std::make_unique<RegionCursor>(arena, d, p, mode); });
}

} // namespace

Strategy score_bounding_strategy(std::shared_ptr<const Arena> arena, std::shared_ptr<const Decomposition> d,
                                 Player player)
{
    const std::string name = player == d->root_owner ? "tau-star" : "sigma-star";
    return region_strategy(std::move(arena), std::move(d), player, Mode::Bounding, name);
}

Strategy sigma_star(std::shared_ptr<const Arena> arena, std::shared_ptr<const Decomposition> d)
{
    const Player p = opponent(d->root_owner);
    return score_bounding_strategy(std::move(arena), std::move(d), p);
}

Strategy tau_star(std::shared_ptr<const Arena> arena, std::shared_ptr<const Decomposition> d)
{
    const Player p = d->root_owner;
    return score_bounding_strategy(std::move(arena), std::move(d), p);
}

Strategy naive_zielonka_strategy(std::shared_ptr<const Arena> arena, std::shared_ptr<const Decomposition> d,
                                 Player player)
{
    return region_strategy(std::move(arena), std::move(d), player, Mode::Naive, "naive");
}

ChangePointTrace trace_change_points(std::shared_ptr<const Arena> arena, std::shared_ptr<const Decomposition> d,
                                     std::span<const VertexId> play)
{
    const Player i = d->root_owner;
    const VertexSet region = d->region(i);
    ChangePointTrace trace;
    if (play.empty()) return trace;

    std::unique_ptr<Node> node = make_node(arena.get(), d.get(), i, Mode::Bounding);
    auto* tau = dynamic_cast<TauNode*>(node.get());

    ChildChoice previous;
    for (std::size_t r = 0; r < play.size(); ++r) {
        const VertexId v = play[r];
        if (!region.contains(v))
            throw InconsistentPlay("position " + std::to_string(r) + " leaves the region " + region.to_string());
        if (r > 0) {
            const VertexId u = play[r - 1];
            if (!arena->has_edge(u, v))
                throw InconsistentPlay("position " + std::to_string(r) + " does not follow an edge");
            if (arena->owner(u) == i && node->move() != v)
                throw InconsistentPlay("position " + std::to_string(r) + " deviates from tau-star");
        }
        node->push(v);
        const ChildChoice c = tau ? tau->current() : ChildChoice{};
        if (r == 0 || c != previous) {
            trace.positions.push_back(r);
            trace.c_values.push_back(c);
        }
        previous = c;
    }
    return trace;
}

} // namespace muller
