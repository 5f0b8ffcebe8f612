#include "fivefour/mds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>

#include <json.hpp>

namespace fivefour {

namespace {

// B = -1/2 J (D o D) J with J = I - 11^T/n.
Matrix double_centered(const DissimilarityMatrix& d) {
    const std::size_t n = kSeats;
    Matrix sq(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sq(i, j) = d(i, j) * d(i, j);
        }
    }
    std::vector<double> row_mean(n, 0.0);
    double grand = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            row_mean[i] += sq(i, j);
        }
        grand += row_mean[i];
        row_mean[i] /= static_cast<double>(n);
    }
    grand /= static_cast<double>(n * n);
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Row and column means coincide for a symmetric input.
            b(i, j) = -0.5 * (sq(i, j) - row_mean[i] - row_mean[j] + grand);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            b(j, i) = b(i, j);
        }
    }
    return b;
}

std::size_t extreme_index(const std::vector<Justice>& roster, const std::vector<double>& values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double a = std::abs(values[i]);
        const double b = std::abs(values[best]);
        if (a > b || (a == b && roster[i].name < roster[best].name)) {
            best = i;
        }
    }
    return best;
}

std::optional<std::size_t> find_anchor(const std::vector<Justice>& roster, const std::vector<double>& x1,
                                       const std::vector<std::string>& anchors) {
    auto ends_with = [](const std::string& s, const std::string& suffix) {
        return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    for (const auto& name : anchors) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < roster.size(); ++i) {
                const bool hit = pass == 0 ? roster[i].name == name : ends_with(roster[i].name, name);
                if (hit && x1[i] != 0.0) {
                    return i;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::string> default_anchors() {
    return {"Thomas", "Scalia", "Rehnquist", "Alito", "Gorsuch", "Burger", "Harlan", "Whittaker", "Reed", "Vinson"};
}

std::size_t Embedding::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < roster.size(); ++i) {
        if (roster[i].name == name) {
            return i;
        }
    }
    throw DataError("justice '" + name + "' is not in the embedding");
}

std::vector<std::string> Embedding::names() const {
    std::vector<std::string> out;
    for (const auto& j : roster) {
        out.push_back(j.name);
    }
    return out;
}

Embedding classical_mds(const DissimilarityMatrix& d, int dimension, const MdsOptions& options, Diagnostics* diag) {
    if (dimension != 1 && dimension != 2) {
        throw ConfigError("MDS dimension must be 1 or 2");
    }
    const auto eig = symmetric_eigen(double_centered(d), options.eigen);

    Embedding e;
    e.roster = d.roster();
    e.dimension = dimension;
    e.spectrum = eig.values;
    std::array<std::vector<double>, 2> columns;
    for (int k = 0; k < 2; ++k) {
        double lambda = eig.values[static_cast<std::size_t>(k)];
        if (!(lambda > 0.0)) {
            if (k < dimension) {
                warn(diag, "MDS: eigenvalue " + std::to_string(k + 1) + " is " + std::to_string(lambda) +
                               "; dimension " + std::to_string(k + 1) + " embedded as zero");
            }
            lambda = 0.0;
        }
        e.eigenvalues[static_cast<std::size_t>(k)] = lambda;
        const double scale = std::sqrt(lambda);
        columns[k].resize(kSeats);
        for (std::size_t i = 0; i < kSeats; ++i) {
            columns[k][i] = eig.vectors(i, static_cast<std::size_t>(k)) * scale;
        }
    }
    if (eig.values.back() < -1e-9 * std::max(1.0, std::abs(eig.values.front()))) {
        warn(diag, "MDS: dissimilarities are not Euclidean (smallest eigenvalue " +
                       std::to_string(eig.values.back()) + "); negative eigenvalues truncated");
    }

    // Dimension 1: anchor justice on the positive side.
    std::string note;
    const auto anchor = find_anchor(e.roster, columns[0], options.anchors);
    std::size_t ref = anchor ? *anchor : extreme_index(e.roster, columns[0]);
    const bool flip1 = columns[0][ref] < 0.0;
    note = std::string(anchor ? "anchor " : "largest |x1| ") + e.roster[ref].name + " placed at x1>0";
    note += flip1 ? " (dimension 1 reflected)" : "";
    if (flip1) {
        for (auto& v : columns[0]) {
            v = -v;
        }
    }
    if (dimension == 2) {
        ref = extreme_index(e.roster, columns[1]);
        const bool flip2 = columns[1][ref] < 0.0;
        note += "; largest |x2| " + e.roster[ref].name + " placed at x2>0";
        note += flip2 ? " (dimension 2 reflected)" : "";
        if (flip2) {
            for (auto& v : columns[1]) {
                v = -v;
            }
        }
    }
    e.orientation_note = note;
    e.coords.resize(kSeats);
    for (std::size_t i = 0; i < kSeats; ++i) {
        e.coords[i] = {columns[0][i], dimension == 2 ? columns[1][i] : 0.0};
    }
    return e;
}

double stress(const DissimilarityMatrix& d, const Embedding& e) {
    if (d.roster() != e.roster) {
        throw DataError("stress: matrix and embedding rosters differ");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const double dist = std::hypot(e.coords[i].x - e.coords[j].x, e.coords[i].y - e.coords[j].y);
            const double diff = dist - d(i, j);
            total += diff * diff;
        }
    }
    return total;
}

Embedding make_embedding(std::vector<Justice> roster, std::vector<Point> coords) {
    if (roster.size() != coords.size()) {
        throw DataError("embedding roster and coordinates differ in length");
    }
    Embedding e;
    e.roster = std::move(roster);
    e.coords = std::move(coords);
    e.dimension = 2;
    e.orientation_note = "supplied coordinates";
    return e;
}

std::string embedding_json(const Embedding& e) {
    nlohmann::ordered_json j;
    j["dimension"] = e.dimension;
    j["eigenvalues"] = {e.eigenvalues[0], e.eigenvalues[1]};
    j["spectrum"] = e.spectrum;
    j["orientation"] = e.orientation_note;
    auto& pts = j["justices"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < e.size(); ++i) {
        nlohmann::ordered_json p;
        p["name"] = e.roster[i].name;
        p["x1"] = e.coords[i].x;
        if (e.dimension == 2) {
            p["x2"] = e.coords[i].y;
        }
        pts.push_back(std::move(p));
    }
    return j.dump(2);
}

void write_embedding_csv(std::ostream& out, const Embedding& e) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << (e.dimension == 2 ? "justice_name,x1,x2\n" : "justice_name,x1\n");
    for (std::size_t i = 0; i < e.size(); ++i) {
        out << e.roster[i].name << ',' << e.coords[i].x;
        if (e.dimension == 2) {
            out << ',' << e.coords[i].y;
        }
        out << '\n';
    }
    out << "# eigenvalues," << e.eigenvalues[0] << ',' << e.eigenvalues[1] << '\n';
    out.flags(flags);
    out.precision(precision);
}

}  // namespace fivefour
