#include "ndr/closure.hpp"

#include <algorithm>

namespace ndr {

SpanBasis::Row SpanBasis::to_row(const VField& f)
{
    Row r;
    for (int k = 0; k < f.dim; ++k)
        for (const auto& [m, c] : f.comp[k].terms())
            r.push_back({Key{k, m}, c});
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

bool SpanBasis::reduce(Row& r) const
{
    // Eliminate the leading key while some basis row pivots on it.  Rows
    // have their pivot as smallest key, so the leading key only grows.
    while (!r.empty()) {
        auto it = pivot_of_.find(r.front().first);
        if (it == pivot_of_.end())
            return true;
        const Row& row = rows_[it->second];
        const Rational factor = r.front().second; // row is monic on the pivot
        Row merged;
        merged.reserve(r.size() + row.size());
        size_t i = 0, j = 0;
        while (i < r.size() || j < row.size()) {
            if (j == row.size() || (i < r.size() && r[i].first < row[j].first)) {
                merged.push_back(r[i++]);
            } else if (i == r.size() || row[j].first < r[i].first) {
                merged.push_back({row[j].first, -factor * row[j].second});
                ++j;
            } else {
                Rational v = r[i].second - factor * row[j].second;
                if (v != 0) merged.push_back({r[i].first, std::move(v)});
                ++i;
                ++j;
            }
        }
        r = std::move(merged);
    }
    return false;
}

bool SpanBasis::insert(const VField& f)
{
    Row r = to_row(f);
    if (!reduce(r))
        return false;
    const Rational lead = r.front().second;
    for (auto& [k, v] : r) v /= lead;
    pivot_of_[r.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

bool SpanBasis::contains(const VField& f) const
{
    Row r = to_row(f);
    return !reduce(r);
}

bool ClosureReport::spans(const VField& f) const
{
    SpanBasis sb;
    for (const auto& b : basis) sb.insert(b);
    return sb.contains(f);
}

ClosureReport closure(const std::vector<VField>& generators, ClosureOptions opts)
{
    if (generators.empty())
        throw std::invalid_argument("closure needs at least one generator");
    for (const auto& g : generators)
        if (g.degree() > opts.degree_cap)
            throw std::invalid_argument("degree_cap below generator degree");
    if (opts.round_cap < 1)
        throw std::invalid_argument("round_cap must be >= 1");

    ClosureReport rep;
    SpanBasis span;
    for (const auto& g : generators)
        if (span.insert(g))
            rep.basis.push_back(g);

    size_t fresh_begin = 0; // basis index where the previous round's new fields start
    bool stable = false;

    while (!stable && !rep.offending && rep.rounds < opts.round_cap) {
        ++rep.rounds;
        const size_t n = rep.basis.size();

        std::vector<VField> candidates;
        for (size_t i = 0; i < n; ++i) {
            // only pairs touching a field added in the previous round are new
            const size_t j0 = std::max(i + 1, fresh_begin);
            for (size_t j = j0; j < n; ++j) {
                VField br = bracket(rep.basis[i], rep.basis[j]);
                if (!br.is_zero()) candidates.push_back(std::move(br));
            }
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const VField& a, const VField& b) { return a.degree() < b.degree(); });

        fresh_begin = n;
        for (auto& cand : candidates) {
            if (cand.degree() > opts.degree_cap) {
                // The basis only ever holds fields of degree <= degree_cap,
                // so the over-cap part of this bracket cannot be reduced:
                // it is independent of any such basis.
                rep.offending_degree = cand.degree();
                rep.offending = std::move(cand);
                break;
            }
            if (span.insert(cand))
                rep.basis.push_back(std::move(cand));
        }
        stable = rep.basis.size() == fresh_begin;
    }

    rep.dimension = static_cast<int>(rep.basis.size());
    rep.closed = stable && !rep.offending;
    for (const auto& f : rep.basis)
        ++rep.degree_histogram[f.degree()];
    return rep;
}

std::vector<VField> generator_set(const std::string& kind, Alg alg)
{
    if (kind == "riccati") return riccati_generators(alg);
    if (kind == "rotations") return rotation_generators(alg);
    if (kind == "plus-minus") return plus_minus_generators(alg);
    if (kind == "alt-left") return alt_quadratic_generators(alg, QuadSide::Left);
    if (kind == "alt-right") return alt_quadratic_generators(alg, QuadSide::Right);
    if (kind == "schrodinger") {
        if (alg != Alg::H)
            throw std::invalid_argument("the schrodinger generator set lives on H");
        return schrodinger_generators();
    }
    throw std::invalid_argument("unknown generator set '" + kind + "'");
}

} // namespace ndr
