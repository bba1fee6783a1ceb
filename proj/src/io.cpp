#include "qwave/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace qwave {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write " + path.string());
    os << std::setprecision(17);
    return os;
}

void close_out(std::ofstream& os, const std::filesystem::path& path) {
    os.close();
    if (!os) throw IoError("write failed for " + path.string());
}

constexpr const char* kSlots[4] = {"s1", "v1", "v2", "s2"};

}  // namespace

nlohmann::json filters_to_json(const FilterBank& fb) {
    nlohmann::json j;
    j["eta"] = fb.eta;
    j["filters"] = nlohmann::json::array();
    for (int e = 0; e < 4; ++e) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (int k1 = 0; k1 < fb.eta; ++k1)
            for (int k2 = 0; k2 < fb.eta; ++k2) {
                const auto c = fb.coeff(e, k1, k2).components();
                coeffs.push_back({{"k", {k1, k2}}, {"q", {c[0], c[1], c[2], c[3]}}});
            }
        j["filters"].push_back({{"epsilon", e}, {"coefficients", coeffs}});
    }
    return j;
}

FilterBank filters_from_json(const nlohmann::json& j) {
    try {
        FilterBank fb(j.at("eta").get<int>());
        for (const auto& f : j.at("filters")) {
            const int e = f.at("epsilon").get<int>();
            if (e < 0 || e > 3) throw IoError("filter index out of range");
            for (const auto& c : f.at("coefficients")) {
                const auto k = c.at("k").get<std::array<int, 2>>();
                const auto q = c.at("q").get<std::array<double, 4>>();
                if (k[0] < 0 || k[1] < 0 || k[0] >= fb.eta || k[1] >= fb.eta) throw IoError("coefficient index out of range");
                fb.coeff(e, k[0], k[1]) = Quaternion(q[0], q[1], q[2], q[3]);
            }
        }
        return fb;
    } catch (const nlohmann::json::exception& ex) {
        throw IoError(std::string("malformed filter document: ") + ex.what());
    }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    auto os = open_out(path);
    os << j.dump(2) << '\n';
    close_out(os, path);
}

void write_filters(const std::filesystem::path& path, const FilterBank& fb) { write_json(path, filters_to_json(fb)); }

FilterBank read_filters(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot read " + path.string());
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw IoError(path.string() + ": " + ex.what());
    }
    return filters_from_json(j);
}

void write_samples_csv(const std::filesystem::path& path, const SampledFunction& f) {
    auto os = open_out(path);
    os << "x1,x2,magnitude,R,G,B\n";
    for (int p1 = 0; p1 < f.n; ++p1)
        for (int p2 = 0; p2 < f.n; ++p2) {
            const Quaternion& q = f.at(p1, p2);
            const auto rgb = polar_rgb(q);
            os << p1 * f.h << ',' << p2 * f.h << ',' << abs(q) << ',' << rgb[0] << ',' << rgb[1] << ',' << rgb[2]
               << '\n';
        }
    close_out(os, path);
}

void write_lambda_csv(const std::filesystem::path& path, const LambdaGrid& g) {
    auto os = open_out(path);
    os << "xi1,xi2,lambda\n";
    for (size_t i = 0; i < g.lambda.size(); ++i) os << g.xi1[i] << ',' << g.xi2[i] << ',' << g.lambda[i] << '\n';
    close_out(os, path);
}

void write_ensemble(std::ostream& os, const Ensemble& u) {
    const auto prec = os.precision(17);
    os << "eta " << u.eta() << '\n';
    for (int k1 = 0; k1 < u.eta(); ++k1)
        for (int k2 = 0; k2 < u.eta(); ++k2) {
            const SVBlockMatrix m = u.entry(k1, k2);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    const SVMatrix b = m.block(r, c);
                    const Quaternion* q[4] = {&b.s1, &b.v1, &b.v2, &b.s2};
                    for (int s = 0; s < 4; ++s)
                        os << k1 << ' ' << k2 << ' ' << r << ' ' << c << ' ' << kSlots[s] << ' ' << q[s]->x0 << ' '
                           << q[s]->x1 << ' ' << q[s]->x2 << ' ' << q[s]->x12 << '\n';
                }
        }
    os.precision(prec);
}

Ensemble read_ensemble(std::istream& is) {
    std::string tag;
    int eta = 0;
    if (!(is >> tag >> eta) || tag != "eta" || eta < 2) throw IoError("missing ensemble header");
    std::vector<SVBlockMatrix> m(static_cast<size_t>(eta * eta), SVBlockMatrix(4));
    int k1, k2, r, c;
    std::string slot;
    double x[4];
    size_t count = 0;
    while (is >> k1 >> k2 >> r >> c >> slot >> x[0] >> x[1] >> x[2] >> x[3]) {
        const auto it = std::find(std::begin(kSlots), std::end(kSlots), slot);
        if (it == std::end(kSlots) || k1 < 0 || k2 < 0 || k1 >= eta || k2 >= eta || r < 0 || c < 0 || r > 3 || c > 3)
            throw IoError("bad ensemble record " + std::to_string(count + 1));
        const int s = static_cast<int>(it - std::begin(kSlots));
        m[k1 * eta + k2].at(2 * r + s / 2, 2 * c + s % 2) = Quaternion(x[0], x[1], x[2], x[3]);
        ++count;
    }
    if (count != static_cast<size_t>(eta * eta * 64)) throw IoError("ensemble record count mismatch");
    Ensemble u(eta);
    for (int a = 0; a < eta; ++a)
        for (int b = 0; b < eta; ++b) u.set_entry(a, b, m[a * eta + b]);
    return u;
}

IterationStats iteration_stats(std::vector<long> it, int runs) {
    IterationStats s;
    s.runs = runs;
    s.solved = static_cast<int>(it.size());
    if (it.empty()) return s;
    std::sort(it.begin(), it.end());
    auto quantile = [&](double p) {
        const double pos = p * static_cast<double>(it.size() - 1);
        const size_t lo = static_cast<size_t>(pos);
        const size_t hi = std::min(lo + 1, it.size() - 1);
        return static_cast<double>(it[lo]) + (pos - static_cast<double>(lo)) * static_cast<double>(it[hi] - it[lo]);
    };
    s.min = static_cast<double>(it.front());
    s.max = static_cast<double>(it.back());
    s.q1 = quantile(0.25);
    s.median = quantile(0.5);
    s.q3 = quantile(0.75);
    s.mean = std::accumulate(it.begin(), it.end(), 0.0) / static_cast<double>(it.size());
    return s;
}

void write_stats_csv(const std::filesystem::path& path, const std::string& problem, int eta, int mu,
                     const IterationStats& s) {
    auto os = open_out(path);
    os << "problem,eta,mu,solved,runs,min,q1,median,q3,mean,max\n";
    os << problem << ',' << eta << ',' << mu << ',' << s.solved << ',' << s.runs;
    if (s.solved > 0)
        os << ',' << s.min << ',' << s.q1 << ',' << s.median << ',' << s.q3 << ',' << s.mean << ',' << s.max;
    else
        os << ",,,,,,";
    os << '\n';
    close_out(os, path);
}

}  // namespace qwave
