#include "sglde/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace sglde {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

void write_meta(std::ostream& os, const Metadata& meta) {
    for (const auto& [k, v] : meta) os << "# " << k << "=" << v << "\n";
}

void write_tx(std::ostream& os, const std::vector<double>& t, const std::vector<double>& x,
              const Metadata& meta) {
    write_meta(os, meta);
    os << "t,x\n";
    for (std::size_t i = 0; i < t.size(); ++i) os << fmt17(t[i]) << "," << fmt17(x[i]) << "\n";
}

std::pair<std::vector<double>, std::vector<double>> read_tx(std::istream& is) {
    std::vector<double> t, x;
    std::string line;
    bool saw_header = false;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != "t,x" && line != "t,x\r")
                throw domain_error("t,x CSV: expected header 't,x', got '" + line + "'");
            saw_header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw domain_error("t,x CSV: missing comma on line " + std::to_string(lineno));
        std::size_t pos = 0;
        double tv, xv;
        try {
            tv = std::stod(line.substr(0, comma), &pos);
            xv = std::stod(line.substr(comma + 1), &pos);
        } catch (const std::exception&) {
            throw domain_error("t,x CSV: bad number on line " + std::to_string(lineno));
        }
        t.push_back(tv);
        x.push_back(xv);
    }
    if (!saw_header) throw domain_error("t,x CSV: empty file");
    if (t.size() < 2) throw domain_error("t,x CSV: needs at least 2 rows");
    return {std::move(t), std::move(x)};
}

}  // namespace

void write_series_csv(std::ostream& os, const Series& s, const Metadata& meta) {
    write_tx(os, s.times, s.values, meta);
}

void write_path_csv(std::ostream& os, const Path& p, const Metadata& meta) {
    write_tx(os, p.grid.times(), p.values, meta);
}

void write_observations_csv(std::ostream& os, const ObservationSet& o, const Metadata& meta) {
    write_tx(os, o.times, o.values, meta);
}

Series read_series_csv(std::istream& is) {
    auto [t, x] = read_tx(is);
    return Series{std::move(t), std::move(x)};
}

Path read_path_csv(std::istream& is) {
    auto [t, x] = read_tx(is);
    const std::size_t n = t.size() - 1;
    TimeGrid grid(t.front(), t.back(), n);
    const double scale = std::max(std::abs(t.front()), std::abs(t.back()));
    for (std::size_t i = 0; i <= n; ++i)
        if (std::abs(t[i] - grid.time(i)) > 1e-9 * std::max(1.0, scale))
            throw domain_error("read_path_csv: mesh not uniform at row " + std::to_string(i));
    return Path{grid, std::move(x)};
}

ObservationSet read_observations_csv(std::istream& is) {
    auto [t, x] = read_tx(is);
    return ObservationSet{std::move(t), std::move(x)};
}

nlohmann::json path_to_json(const Path& p) {
    return nlohmann::json{
        {"grid", {{"t0", p.grid.t0()}, {"T", p.grid.T()}, {"n", p.grid.n()}}},
        {"values", p.values}};
}

Path path_from_json(const nlohmann::json& j) {
    const auto& g = j.at("grid");
    TimeGrid grid(g.at("t0").get<double>(), g.at("T").get<double>(), g.at("n").get<std::size_t>());
    return Path{grid, j.at("values").get<std::vector<double>>()};
}

nlohmann::json observations_to_json(const ObservationSet& o) {
    return nlohmann::json{{"times", o.times}, {"values", o.values}};
}

ObservationSet observations_from_json(const nlohmann::json& j) {
    return ObservationSet{j.at("times").get<std::vector<double>>(),
                          j.at("values").get<std::vector<double>>()};
}

nlohmann::json theta_estimate_to_json(const ThetaEstimate& e) {
    return nlohmann::json{{"alpha", e.alpha},
                          {"m", e.m},
                          {"sigma", e.sigma},
                          {"converged", e.converged},
                          {"residual", e.residual}};
}

void write_em_trace_csv(std::ostream& os, const EmTrace& trace, const Metadata& meta) {
    write_meta(os, meta);
    os << "iter,alpha,m,sigma,fallback_fraction\n";
    for (const auto& it : trace)
        os << it.iteration << "," << fmt17(it.theta.alpha) << "," << fmt17(it.theta.m) << ","
           << fmt17(it.theta.sigma) << "," << fmt17(it.fallback_fraction) << "\n";
}

nlohmann::json em_trace_to_json(const EmTrace& trace) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& it : trace) {
        nlohmann::json row = theta_estimate_to_json(it.theta);
        row["iter"] = it.iteration;
        row["fallback_fraction"] = it.fallback_fraction;
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace sglde
