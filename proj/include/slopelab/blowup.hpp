#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "slopelab/multi_index.hpp"
#include "slopelab/rational.hpp"

namespace slopelab {

enum class ComponentKind { strict_z, strict_s, exceptional };
enum class BlowupMode { toric, abstract };

std::string to_string(ComponentKind k);
std::string to_string(BlowupMode m);

/// Coordinate hyperplanes are D1..Dn (strict-Z when a_i > 0, strict-S
/// otherwise); exceptional divisors are E1, E2, ... in creation order.
struct Component {
    std::string id;
    ComponentKind kind = ComponentKind::strict_z;
    std::optional<MultiIndex> ray;
    std::int64_t vZ = 0;
    Rat vS;
};

/// Z = sum a_i D_i, S = sum r_i D_i.
struct BlowupInitial {
    std::size_t dim = 0;
    MultiIndex a;
    std::vector<Rat> r;
};

/// The closing inequality chain of one step:
/// l0 = degS (sum a alpha + sum eps vZ(E)), l1 = degS + degS sum eps vZ(E),
/// l2 = sum r eps + sum eps degS vZ(E), l3 = sum r eps + sum eps vS(E) = vS(P).
struct StepAudit {
    Rat l0, l1, l2, l3;
    /// Toric mode: recursion agrees with the valuation pairing of the new ray.
    bool conserved = true;
    [[nodiscard]] bool ok() const { return l0 >= l1 && l1 >= l2 && l2 >= l3 && conserved; }
};

struct ToricCenter {
    std::vector<std::string> ids;
};

struct AbstractCenter {
    std::vector<std::int64_t> alpha;  // per coordinate hyperplane
    std::vector<std::int64_t> epsS;   // per coordinate hyperplane, 0 or 1
    std::vector<std::int64_t> epsE;   // per existing exceptional, 0 or 1
};

using BlowupStep = std::variant<ToricCenter, AbstractCenter>;

class BlowupState {
public:
    /// Throws std::invalid_argument on malformed data (length mismatch,
    /// negative r, a = 0).
    static BlowupState initial(const BlowupInitial& init, BlowupMode mode);

    [[nodiscard]] BlowupMode mode() const noexcept { return mode_; }
    [[nodiscard]] const BlowupInitial& data() const noexcept { return init_; }
    [[nodiscard]] const Rat& degS() const noexcept { return degS_; }
    [[nodiscard]] const std::vector<Component>& components() const noexcept { return comps_; }
    /// Maximal cones as sorted component indices (toric mode only).
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& fan() const noexcept { return fan_; }
    [[nodiscard]] const std::vector<StepAudit>& audits() const noexcept { return audits_; }
    [[nodiscard]] std::size_t exceptional_count() const noexcept { return comps_.size() - init_.dim; }
    /// Index of the component with this id; throws std::invalid_argument.
    [[nodiscard]] std::size_t index_of(const std::string& id) const;

    friend BlowupState blow_up(const BlowupState& s, const BlowupStep& step);

private:
    BlowupMode mode_ = BlowupMode::toric;
    BlowupInitial init_;
    Rat degS_;
    std::vector<Component> comps_;
    std::vector<std::vector<std::size_t>> fan_;
    std::vector<StepAudit> audits_;
};

/// Blows up the center and appends the exceptional component P. Throws
/// std::invalid_argument for centers violating conditions (i)-(iii) or
/// malformed steps; inequality failures are recorded in the audit, not thrown.
BlowupState blow_up(const BlowupState& s, const BlowupStep& step);

struct InequalityRow {
    std::string id;
    ComponentKind kind;
    std::optional<MultiIndex> ray;
    std::int64_t vZ;
    Rat vS;
    Rat bound;   // degS * vZ
    Rat margin;  // bound - vS
};

struct InequalityReport {
    Rat degS;
    std::vector<InequalityRow> rows;
    /// One line per failing component or step audit.
    std::vector<std::string> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// vS(E) <= degS * vZ(E) for every component with vZ(E) > 0, plus the
/// recorded step audits.
InequalityReport verify_inequality(const BlowupState& s);

struct BlowupScript {
    BlowupInitial init;
    BlowupMode mode = BlowupMode::toric;
    std::vector<BlowupStep> steps;
};

/// Rejection of step `step` (1-based) of a script.
class StepError : public std::invalid_argument {
public:
    StepError(std::size_t step, const std::string& what)
        : std::invalid_argument("step " + std::to_string(step) + ": " + what), step_(step) {}
    [[nodiscard]] std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

BlowupState chain_from_script(const BlowupScript& script);

}  // namespace slopelab
