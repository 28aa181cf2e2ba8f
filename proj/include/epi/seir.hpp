#ifndef EPI_SEIR_HPP
#define EPI_SEIR_HPP

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "epi/graph.hpp"

namespace epi {

enum class Compartment : std::uint8_t { Susceptible, Exposed, Infectious, Recovered };

/// Lognormal stage-duration distribution, parameterized by target moments.
struct DurationDistribution {
    double mean = 0.0;
    double sd = 0.0;
    double mu = 0.0;     // log-scale location
    double sigma = 0.0;  // log-scale spread

    /// Moment matching: sigma^2 = ln(1 + sd^2/mean^2), mu = ln(mean) - sigma^2/2.
    /// Throws std::invalid_argument for nonpositive mean or sd.
    static DurationDistribution from_moments(double mean, double sd);
};

/// One continuous lognormal draw, rounded up to a whole day (at least 1).
int sample_duration(const DurationDistribution& dist, std::mt19937_64& rng);

/// Per-node SEIR state plus the transmission history needed for
/// reproduction-number estimation. One instance per replica; a replica's
/// evolution is sequential and owns its rng stream.
class Population {
public:
    explicit Population(std::uint32_t n);

    std::uint32_t size() const { return static_cast<std::uint32_t>(compartment_.size()); }

    Compartment compartment(std::uint32_t node) const { return compartment_[node]; }
    std::int32_t infector_of(std::uint32_t node) const { return infector_[node]; }
    std::int32_t day_exposed(std::uint32_t node) const { return day_exposed_[node]; }
    std::int32_t day_infectious(std::uint32_t node) const { return day_infectious_[node]; }
    std::int32_t day_recovered(std::uint32_t node) const { return day_recovered_[node]; }
    /// Exposures attributed to this node while it was infectious.
    std::uint32_t secondary_count(std::uint32_t node) const { return secondary_count_[node]; }

    std::uint32_t susceptible_count() const { return counts_[0]; }
    std::uint32_t exposed_count() const { return counts_[1]; }
    std::uint32_t infectious_count() const { return counts_[2]; }
    std::uint32_t recovered_count() const { return counts_[3]; }
    /// Nodes currently in E or I.
    std::uint32_t active_count() const { return counts_[1] + counts_[2]; }
    /// Nodes that ever left S.
    std::uint32_t ever_infected_count() const { return size() - counts_[0]; }

    std::span<const std::uint32_t> exposed_nodes() const { return exposed_; }
    std::span<const std::uint32_t> infectious_nodes() const { return infectious_; }

    /// Marks node Exposed on `day` (infector < 0 for seeding) with a freshly
    /// sampled incubation duration.
    void expose(std::uint32_t node, std::int32_t infector, int day,
                const DurationDistribution& incubation, std::mt19937_64& rng);

    friend struct DayStep;

private:
    std::vector<Compartment> compartment_;
    std::vector<int> days_remaining_;
    std::vector<std::int32_t> infector_;
    std::vector<std::int32_t> day_exposed_;
    std::vector<std::int32_t> day_infectious_;
    std::vector<std::int32_t> day_recovered_;
    std::vector<std::uint32_t> secondary_count_;
    std::vector<std::uint32_t> exposed_;     // E members, exposure order
    std::vector<std::uint32_t> infectious_;  // I members, sorted by node id
    std::uint32_t counts_[4] = {0, 0, 0, 0};
};

/// Infects one uniformly random node (patient zero) on day 0.
/// Throws std::logic_error if any node has already left S.
std::uint32_t seed_patient_zero(Population& pop, const DurationDistribution& incubation,
                                std::mt19937_64& rng);

struct DayOutcome {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> exposures;  // (node, infector)
    std::vector<std::uint32_t> became_infectious;
    std::uint32_t became_recovered = 0;
};

/// Advances the population by one day:
///   1. every Infectious-Susceptible edge pair attempts transmission with
///      the edge's rate, using start-of-day compartments; a susceptible is
///      exposed at most once per day and the first success in ascending
///      infector id order is recorded as its infector;
///   2. stage timers of nodes exposed before today decrement, with E->I and
///      I->R transitions when they hit zero.
/// A node exposed on day t is therefore never infectious on day t.
/// `edge_rates` maps edge index -> per-day transmission probability.
DayOutcome transmission_step(const Graph& graph, Population& pop, int day,
                             std::span<const double> edge_rates,
                             const DurationDistribution& incubation,
                             const DurationDistribution& infection, std::mt19937_64& rng);

}  // namespace epi

#endif
