#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpv {

// Candidate ids are 1-based; 0 marks an abstaining ballot.
using CandidateId = std::uint32_t;
inline constexpr CandidateId abstain = 0;

enum class Variant { conservative, revolutionary };

char variant_letter(Variant v);
std::string variant_name(Variant v);

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& what, std::uint64_t budget)
        : std::runtime_error(what), budget(budget) {}
    std::uint64_t budget;
};

// A set of candidate ids, kept sorted and duplicate-free.
class Committee {
public:
    Committee() = default;
    Committee(std::initializer_list<CandidateId> ids);
    explicit Committee(std::vector<CandidateId> ids);

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<CandidateId>& ids() const { return ids_; }

    bool contains(CandidateId c) const;
    void insert(CandidateId c);
    void erase(CandidateId c);

    // Lexicographic on the sorted id list; a proper prefix sorts first.
    friend auto operator<=>(const Committee&, const Committee&) = default;
    friend bool operator==(const Committee&, const Committee&) = default;

private:
    std::vector<CandidateId> ids_;
};

Committee set_union(const Committee& a, const Committee& b);
bool disjoint(const Committee& a, const Committee& b);
std::string to_string(const Committee& c);

using CommitteeSequence = std::vector<Committee>;

// Multistage plurality voting instance. Immutable after construction.
//
// ballots[t][a] is the candidate approved by agent a at stage t (0 = abstain).
// Stages are addressed 0-based in the C++ API; candidate ids stay 1-based.
class Instance {
public:
    Instance(Variant variant, std::size_t agents, std::size_t candidates,
             std::vector<std::vector<CandidateId>> ballots,
             std::size_t k, std::size_t ell, std::size_t x);

    Variant variant() const { return variant_; }
    std::size_t agents() const { return agents_; }
    std::size_t candidates() const { return candidates_; }
    std::size_t stages() const { return ballots_.size(); }
    std::size_t k() const { return k_; }
    std::size_t ell() const { return ell_; }
    std::size_t x() const { return x_; }

    std::span<const CandidateId> ballots(std::size_t stage) const;
    const std::vector<std::vector<CandidateId>>& all_ballots() const { return ballots_; }

    // Approval count of candidate c at stage t; c = 0 yields the abstention count.
    std::uint32_t count(std::size_t stage, CandidateId c) const;
    // Indexed by candidate id; slot 0 holds abstentions.
    std::span<const std::uint32_t> counts(std::size_t stage) const;

    // Candidates ordered by decreasing count at the stage, ties by lower id.
    std::span<const CandidateId> ranking(std::size_t stage) const;

    bool ever_approved(CandidateId c) const;

    Instance with_parameters(std::size_t k, std::size_t ell, std::size_t x) const;
    Instance with_variant(Variant v) const;

    friend bool operator==(const Instance& a, const Instance& b);

private:
    Variant variant_;
    std::size_t agents_;
    std::size_t candidates_;
    std::vector<std::vector<CandidateId>> ballots_;
    std::size_t k_;
    std::size_t ell_;
    std::size_t x_;
    std::vector<std::vector<std::uint32_t>> counts_;
    std::vector<std::vector<CandidateId>> ranking_;
};

struct SolveStats {
    std::uint64_t states = 0;
    std::uint64_t arcs = 0;
    double elapsed_ms = 0.0;
};

struct SolveReport {
    bool answer = false;
    std::optional<CommitteeSequence> witness;
    std::string algorithm;
    SolveStats stats;
};

inline constexpr std::uint64_t default_solver_budget = 50'000'000;

}  // namespace mpv
