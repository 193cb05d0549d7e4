#include "spanpoly/activities.hpp"

#include <string>

#include "spanpoly/error.hpp"

namespace spanpoly {

ActivityTable::ActivityTable(const Graph& g, std::vector<std::vector<Scalar>> rows)
    : rows_(std::move(rows)) {
    if (rows_.size() != g.vertex_count())
        throw_argument("activities: expected one row per vertex");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        unsigned d = g.degrees_by_index()[i];
        if (rows_[i].size() != d + 1)
            throw_argument("activities: vertex " + std::to_string(g.vertices()[i]) + " has degree " +
                           std::to_string(d) + " but " + std::to_string(rows_[i].size()) +
                           " activities were given (need exactly degree + 1)");
    }
}

ActivityTable ActivityTable::from_family(const Graph& g, const FamilySpec& spec) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        rows.push_back(spec.activities_for_degree(g.degrees_by_index()[i]));
    return ActivityTable(g, std::move(rows));
}

ActivityTable ActivityTable::uniform(const Graph& g, std::vector<Scalar> row) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        unsigned d = g.degrees_by_index()[i];
        if (row.size() != d + 1)
            throw_argument("activities: shared row has length " + std::to_string(row.size()) +
                           " but vertex " + std::to_string(g.vertices()[i]) + " has degree " +
                           std::to_string(d));
        rows.push_back(row);
    }
    return ActivityTable(g, std::move(rows));
}

Scalar ActivityTable::weight(const std::vector<std::uint32_t>& dense_degrees) const {
    Scalar w(1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& u = rows_[i][dense_degrees[i]];
        if (u.is_zero()) return Scalar(0);
        w *= u;
    }
    return w;
}

std::vector<KeyPolynomial> ActivityTable::keys(const Graph& g) const {
    std::vector<KeyPolynomial> out;
    out.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        out.push_back(key_from_activities(rows_[i], g.degrees_by_index()[i]));
    return out;
}

bool ActivityTable::any_zero_row() const {
    for (const auto& row : rows_) {
        bool all_zero = true;
        for (const auto& u : row)
            if (!u.is_zero()) { all_zero = false; break; }
        if (all_zero) return true;
    }
    return false;
}

}  // namespace spanpoly
