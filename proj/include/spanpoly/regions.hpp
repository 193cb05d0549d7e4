#ifndef SPANPOLY_REGIONS_HPP
#define SPANPOLY_REGIONS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spanpoly/roots.hpp"
#include "spanpoly/unipoly.hpp"

namespace spanpoly {

/// Slack for boundary decisions: absolute on angles, relative on radii.
inline constexpr double kAngleSlack = 1e-9;
inline constexpr double kRadiusSlack = 1e-9;

/// Open sector {z != 0 : |arg z| < theta}, 0 < theta <= pi, arg in (-pi, pi].
struct Sector {
    double theta;
};
/// Open disk {|z| < kappa}.
struct Disk {
    double kappa;
};
/// Open disk exterior {|z| > kappa}. kappa = 0 is allowed internally and
/// means the punctured plane (it arises as the degenerate auto-selected
/// radius when no key has a root).
struct Exterior {
    double kappa;
};

class Region {
public:
    Region(Sector s) : v_(s) { validate(); }
    Region(Disk d) : v_(d) { validate(); }
    Region(Exterior e) : v_(e) { validate(); }

    static Region sector(double theta) { return Region(Sector{theta}); }
    static Region disk(double kappa) { return Region(Disk{kappa}); }
    static Region exterior(double kappa) { return Region(Exterior{kappa}); }

    bool is_sector() const { return std::holds_alternative<Sector>(v_); }
    bool is_disk() const { return std::holds_alternative<Disk>(v_); }
    bool is_exterior() const { return std::holds_alternative<Exterior>(v_); }

    double parameter() const;

    /// Open-region membership; z = 0 is never in a sector.
    bool contains(Complex z) const;

    /// Signed margin into the region: positive inside, negative outside,
    /// near zero on the boundary. Angles in radians, radii relative.
    double signed_margin(Complex z) const;

    /// "S[pi/2]", "D[0.25]", "E[1]" -- sector angles are rendered as small
    /// rational multiples of pi when they are one.
    std::string pretty() const;

private:
    void validate() const;
    std::variant<Sector, Disk, Exterior> v_;
};

enum class Verdict {
    Nonvanishing,          // no root in the region (or p identically zero)
    Vanishing,             // a root lies strictly inside
    BoundaryInconclusive,  // nothing strictly inside, but roots within slack
                           // of the boundary
};

enum class RootStatus { Outside, Inside, Boundary };

struct NonvanishingReport {
    Verdict verdict;
    std::optional<Complex> witness;  // offending (or boundary) root
    std::vector<std::pair<RootSet::Root, RootStatus>> per_root;
    bool identically_zero = false;
};

/// The paper's convention: the zero polynomial is A-nonvanishing for every
/// A. Origin roots obstruct disks but never sectors or exteriors with
/// kappa > 0.
NonvanishingReport nonvanishing_on(const UniPoly& p, const Region& r);
NonvanishingReport nonvanishing_on(const RootSet& roots, const Region& r);

}  // namespace spanpoly

#endif
