#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "multipede/structure.hpp"

namespace multipede {

struct GameState {
    const RelStructure* a = nullptr;
    const RelStructure* b = nullptr;
    int k = 1;
    std::vector<std::optional<std::pair<int, int>>> board;  // slot p-1 for pebble p
    int round = 0;
    enum Status { kOngoing, kSpoilerWon, kDuplicatorSurviving } status = kOngoing;

    GameState(const RelStructure& sa, const RelStructure& sb, int pebbles);
    std::vector<PebblePair> pairs() const;
};

struct SpoilerMove {
    int pebble = 1;         // 1..k
    int side = 0;           // 0 = A, 1 = B
    std::vector<int> set;   // nonempty X in the chosen structure
};

class DuplicatorStrategy {
  public:
    virtual ~DuplicatorStrategy() = default;
    /// Y on the other side with |Y| = |X|; nullopt concedes.
    virtual std::optional<std::vector<int>> choose_set(const GameState& st,
                                                       const SpoilerMove& mv) = 0;
    /// x in X answering the pinned y in Y; nullopt concedes.
    virtual std::optional<int> answer(const GameState& st, const SpoilerMove& mv,
                                      const std::vector<int>& y_set, int pinned) = 0;
};

class SpoilerStrategy {
  public:
    virtual ~SpoilerStrategy() = default;
    virtual SpoilerMove choose_move(const GameState& st) = 0;
    virtual int pin(const GameState& st, const SpoilerMove& mv, const std::vector<int>& y_set) = 0;
};

struct RoundOutcome {
    bool duplicator_won = false;
    enum Failure { kNone, kStep2, kStep4, kStrategyConceded } failure = kNone;
    std::vector<int> y_set;
    int pinned = -1;
    int matched = -1;
};

/// One round of the set-based counting game; malformed moves throw
/// InputError (usage, not a game loss).
RoundOutcome play_round(GameState& st, const SpoilerMove& mv, DuplicatorStrategy& dup,
                        SpoilerStrategy& spoiler);

/// Regular segment-fixing map M -> N over the closure of alpha's domain:
/// one swap bit per closed segment, feet of unlisted segments fixed.
struct RegularExtension {
    VertexSet domain_segments;
    VertexSet closed_segments;
    std::map<Vertex, int> swap;  // defined on every closed segment

    /// Image of a structure element id (segments/super-segments fixed).
    int apply(const Multipede& m, int id) const;
};

/// Extends a regular partial isomorphism (given as board pairs over the
/// to_structure element ids) to the closure of its domain by solving the
/// per-edge parity constraints; nullopt iff no consistent extension exists
/// (alpha unsafe). Non-regular alpha throws InputError.
std::optional<RegularExtension> regular_extension(const Multipede& m, const Multipede& n,
                                                  const std::vector<PebblePair>& alpha);

/// Duplicator strategy maintaining a safe partial isomorphism: answers with
/// the unique regular extension inside the closure of the pebbled domain
/// and the identity outside it. Best-effort when the 2k-meagerness
/// precondition fails (concessions are reported as strategy failures).
class SafeDuplicator : public DuplicatorStrategy {
  public:
    SafeDuplicator(const Multipede& m, const Multipede& n);
    std::optional<std::vector<int>> choose_set(const GameState& st, const SpoilerMove& mv) override;
    std::optional<int> answer(const GameState& st, const SpoilerMove& mv,
                              const std::vector<int>& y_set, int pinned) override;

  private:
    const Multipede& m_;
    const Multipede& n_;
    std::optional<int> map_element(const GameState& st, int id, bool from_a);
};

/// Y = X, x = y; sound exactly when both sides are the same structure.
class IdentityDuplicator : public DuplicatorStrategy {
  public:
    std::optional<std::vector<int>> choose_set(const GameState& st, const SpoilerMove& mv) override;
    std::optional<int> answer(const GameState& st, const SpoilerMove& mv,
                              const std::vector<int>& y_set, int pinned) override;
};

/// Uniform pebble, side, and bounded nonempty set.
class RandomSpoiler : public SpoilerStrategy {
  public:
    explicit RandomSpoiler(uint64_t seed, int max_set = 8);
    SpoilerMove choose_move(const GameState& st) override;
    int pin(const GameState& st, const SpoilerMove& mv, const std::vector<int>& y_set) override;

  private:
    std::mt19937_64 rng_;
    int max_set_;
};

/// Targets positive-slave triples of hyperedges incident to pebbled
/// segments, then feet just outside the closure of the pebbled domain.
class GreedySpoiler : public SpoilerStrategy {
  public:
    GreedySpoiler(const Multipede& m, const Multipede& n, uint64_t seed);
    SpoilerMove choose_move(const GameState& st) override;
    int pin(const GameState& st, const SpoilerMove& mv, const std::vector<int>& y_set) override;

  private:
    const Multipede& m_;
    const Multipede& n_;
    std::mt19937_64 rng_;
};

struct Transcript {
    std::vector<std::string> lines;
    GameState::Status status = GameState::kOngoing;
    int rounds_played = 0;
    int strategy_failures = 0;
};

/// Full match with a survival horizon; deterministic given the seed.
Transcript run_match(const RelStructure& a, const RelStructure& b, int k, int rounds,
                     SpoilerStrategy& spoiler, DuplicatorStrategy& dup);

}  // namespace multipede
