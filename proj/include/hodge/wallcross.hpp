#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hodge/chars.hpp"
#include "hodge/params.hpp"

namespace hodge {

struct WallLayer {
    int n = 1;  // Jantzen layer index, >= 1
    HCParameter constituent;
    long multiplicity = 1;
};

// One wall of a deformation ray.  The layer-0 constituent (the
// intermediate extension at the wall) is implicit.
struct WallSpec {
    Rational s;
    std::vector<WallLayer> layers;
};

struct BlockData {
    DeformationRay ray;
    std::vector<WallSpec> walls;  // ascending s; may include the ray
                                  // endpoint when the base parameter
                                  // degenerates there, and s = 0 when
                                  // the requested parameter sits on a
                                  // wall
    std::string provenance = "builtin";
};

// Built-in certified tables for the catalog groups.
BlockData builtin_block_data(const HCParameter& p);

// Wall positions (s-values) for the parameter's deformation ray.
std::vector<Rational> find_walls(const HCParameter& p, const BlockData* external = nullptr);

struct VerifyItem {
    KType ktype;
    std::array<long, 2> expected{0, 0};  // zeta^c chi^H reduction
    std::array<long, 2> got{0, 0};       // signature character
    std::string kind;                    // "identity" or "conservation"
};

struct VerifyReport {
    bool ok = true;
    std::vector<VerifyItem> failures;
    std::vector<std::string> warnings;
};

enum class UnitarityVerdict { unitary, nonunitary, not_hermitian };

// Shared memo of computed character pairs.  Concurrent readers and an
// exclusive writer per key; recomputation is idempotent.
class CharacterLedger {
  public:
    bool lookup(const HCParameter& key, HodgeChar& chi, SigChar& sig) const;
    void store(const HCParameter& key, const HodgeChar& chi, const SigChar& sig);

  private:
    mutable std::mutex mutex_;
    std::map<HCParameter, std::pair<HodgeChar, SigChar>> memo_;
};

// The wall-crossing engine for a fixed window and grading mode.
class Engine {
  public:
    Engine(long window, bool kprime = false);

    void set_external_block_data(const BlockData& bd);

    HodgeChar hodge_char(const HCParameter& p);
    SigChar sig_char(const HCParameter& p);

    VerifyReport verify_identity(const HCParameter& p);
    UnitarityVerdict unitarity_test(const HCParameter& p, std::string* note = nullptr);

    const std::vector<std::string>& warnings() const { return warnings_; }
    long window() const { return window_; }

  private:
    std::pair<HodgeChar, SigChar> compute_pair(const HCParameter& p, int depth);
    BlockData block_data_for(const HCParameter& p) const;

    long window_;
    bool kprime_;
    CharacterLedger ledger_;
    std::optional<BlockData> external_;
    std::vector<std::string> warnings_;
};

}  // namespace hodge
