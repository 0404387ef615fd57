#ifndef NDR_CLOSURE_HPP
#define NDR_CLOSURE_HPP

#include "ndr/vfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ndr {

struct ClosureOptions {
    int degree_cap = 5;
    int round_cap = 12;
};

/// Row-echelon basis of vector fields over the exact rationals, keyed by
/// (component, monomial) coordinates.  Degree-lex monomial order; rows are
/// monic on their pivot.
class SpanBasis {
public:
    /// Reduces f against the basis; inserts the remainder if nonzero.
    /// Returns true if f was independent (and is now part of the span).
    bool insert(const VField& f);

    /// True iff f lies in the current span.
    bool contains(const VField& f) const;

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    struct Key {
        int comp;
        Monomial mono;
        friend std::strong_ordering operator<=>(const Key&, const Key&) = default;
    };
    using Row = std::vector<std::pair<Key, Rational>>; // sorted by key, pivot first

    static Row to_row(const VField& f);
    // Reduces r in place; returns true if a nonzero remainder is left.
    bool reduce(Row& r) const;

    std::vector<Row> rows_;
    std::map<Key, int> pivot_of_; // pivot key -> row index
};

struct ClosureReport {
    std::vector<VField> basis; // independent fields as produced, generators first
    int dimension = 0;
    bool closed = false;
    int rounds = 0;
    std::map<int, int> degree_histogram;
    /// First bracket whose degree exceeded the cap (certificate of
    /// non-closure: no combination of in-cap basis fields can cancel it).
    std::optional<VField> offending;
    int offending_degree = -1;

    bool spans(const VField& f) const; // exact span membership
};

/// Iteratively brackets basis pairs and extends the basis by exact rank
/// until stable.  Candidates inside a round are processed lowest degree
/// first, so when a bracket of degree > degree_cap certifies non-closure
/// the lower-degree independent fields of that round are already recorded.
ClosureReport closure(const std::vector<VField>& generators, ClosureOptions opts = {});

/// "riccati", "rotations", "plus-minus", "alt-left", "alt-right", "schrodinger"
std::vector<VField> generator_set(const std::string& kind, Alg alg);

} // namespace ndr

#endif
