#include "uavplace/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <utility>

#include <json.hpp>

#include "uavplace/errors.hpp"

namespace uavplace::io {

namespace {

using json = nlohmann::ordered_json;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw ParseError("failed writing '" + path + "'");
}

json parse_file(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(std::string("cannot open ") + what + " file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed ") + what + " file '" + path + "': " + e.what());
    }
}

const json& require(const json& j, const char* field, const std::string& what) {
    if (!j.is_object() || !j.contains(field))
        throw ParseError(what + " missing field \"" + field + "\"");
    return j.at(field);
}

void check_schema_version(const json& doc, const char* what) {
    const json& v = require(doc, "schema_version", what);
    long long found = v.is_number_integer() ? v.get<long long>() : -1;
    if (found != 1) throw SchemaVersionMismatch(found);
}

double number(const json& j, const char* field, const std::string& what) {
    const json& v = require(j, field, what);
    if (!v.is_number()) throw ParseError(what + " field \"" + field + "\" must be a number");
    return v.get<double>();
}

int integer(const json& j, const char* field, const std::string& what) {
    const json& v = require(j, field, what);
    if (!v.is_number_integer()) throw ParseError(what + " field \"" + field + "\" must be an integer");
    return v.get<int>();
}

std::vector<double> number_array(const json& j, const char* field, const std::string& what) {
    const json& v = require(j, field, what);
    if (!v.is_array()) throw ParseError(what + " field \"" + field + "\" must be an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const json& e : v) {
        if (!e.is_number())
            throw ParseError(what + " field \"" + field + "\" must contain only numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

}  // namespace

void write_scenario(const std::string& path, const Scenario& s) {
    json doc;
    doc["schema_version"] = 1;
    doc["area"] = {{"xmin", s.area.xmin},
                   {"xmax", s.area.xmax},
                   {"ymin", s.area.ymin},
                   {"ymax", s.area.ymax}};
    doc["k"] = s.k;
    json users = json::array();
    for (const User& u : s.users)
        users.push_back({{"id", u.id}, {"x", u.x}, {"y", u.y}, {"load", u.load}});
    doc["users"] = std::move(users);
    write_text(path, doc.dump(2) + "\n");
}

Scenario read_scenario(const std::string& path) {
    json doc = parse_file(path, "scenario");
    check_schema_version(doc, "scenario");
    Scenario s;
    const json& area = require(doc, "area", "scenario");
    s.area.xmin = number(area, "xmin", "scenario area");
    s.area.xmax = number(area, "xmax", "scenario area");
    s.area.ymin = number(area, "ymin", "scenario area");
    s.area.ymax = number(area, "ymax", "scenario area");
    s.k = integer(doc, "k", "scenario");
    const json& users = require(doc, "users", "scenario");
    if (!users.is_array()) throw ParseError("scenario field \"users\" must be an array");
    s.users.reserve(users.size());
    for (const json& ju : users) {
        User u;
        const json& id = require(ju, "id", "user");
        if (!id.is_string()) throw ParseError("user field \"id\" must be a string");
        u.id = id.get<std::string>();
        u.x = number(ju, "x", "user");
        u.y = number(ju, "y", "user");
        u.load = number(ju, "load", "user");
        s.users.push_back(std::move(u));
    }
    return s;
}

void write_placement(const std::string& path, const Placement& p) {
    json doc;
    doc["schema_version"] = 1;
    json cents = json::array();
    for (const Centroid& c : p.centroids) {
        json jc = {{"x", c.x}, {"y", c.y}};
        if (c.load_coord) jc["load_coord"] = *c.load_coord;
        cents.push_back(std::move(jc));
    }
    doc["centroids"] = std::move(cents);
    json asg = json::object();
    for (const auto& [id, cluster] : p.assignment) asg[id] = cluster;
    doc["assignment"] = std::move(asg);
    doc["iterations"] = p.iterations;
    doc["converged"] = p.converged;
    write_text(path, doc.dump(2) + "\n");
}

Placement read_placement(const std::string& path) {
    json doc = parse_file(path, "placement");
    check_schema_version(doc, "placement");
    Placement p;
    const json& cents = require(doc, "centroids", "placement");
    if (!cents.is_array()) throw ParseError("placement field \"centroids\" must be an array");
    p.centroids.reserve(cents.size());
    for (const json& jc : cents) {
        Centroid c;
        c.x = number(jc, "x", "centroid");
        c.y = number(jc, "y", "centroid");
        if (jc.is_object() && jc.contains("load_coord"))
            c.load_coord = number(jc, "load_coord", "centroid");
        p.centroids.push_back(c);
    }
    const json& asg = require(doc, "assignment", "placement");
    if (!asg.is_object()) throw ParseError("placement field \"assignment\" must be an object");
    for (const auto& [id, v] : asg.items()) {
        if (!v.is_number_integer())
            throw ParseError("assignment for \"" + id + "\" must be an integer");
        p.assignment[id] = v.get<int>();
    }
    p.iterations = integer(doc, "iterations", "placement");
    const json& conv = require(doc, "converged", "placement");
    if (!conv.is_boolean()) throw ParseError("placement field \"converged\" must be a boolean");
    p.converged = conv.get<bool>();
    return p;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.12g", v);
    return buf;
}

void write_report(const std::string& table_path, const std::string& doc_path,
                  const PlacementReport& report, const metrics::ComparisonRecord* comparison) {
    std::string table;
    auto row = [&table](const std::string& name, const std::string& value) {
        table += name;
        table += ',';
        table += value;
        table += '\n';
    };
    row("objective", format_number(report.objective));
    row("mean_dist_all", format_number(report.mean_dist_all));
    row("mean_dist_weighted", format_number(report.mean_dist_weighted));
    row("mean_dist_highload", format_number(report.mean_dist_highload));
    row("highload_threshold", format_number(report.highload_threshold));
    for (std::size_t i = 0; i < report.per_cluster_load.size(); ++i)
        row("per_cluster_load[" + std::to_string(i) + "]",
            format_number(report.per_cluster_load[i]));
    for (std::size_t i = 0; i < report.objective_trace.size(); ++i)
        row("objective_trace[" + std::to_string(i) + "]",
            format_number(report.objective_trace[i]));
    if (comparison) {
        for (const auto& [name, d] : comparison->metrics) {
            row("a_" + name, format_number(d.a));
            row("b_" + name, format_number(d.b));
            row("delta_" + name, format_number(d.delta));
            row("winner_" + name, d.winner);
        }
    }
    write_text(table_path, table);

    json doc;
    doc["schema_version"] = 1;
    json jr;
    jr["objective"] = report.objective;
    jr["per_cluster_load"] = report.per_cluster_load;
    jr["mean_dist_all"] = report.mean_dist_all;
    jr["mean_dist_weighted"] = report.mean_dist_weighted;
    jr["mean_dist_highload"] = report.mean_dist_highload;
    jr["highload_threshold"] = report.highload_threshold;
    jr["objective_trace"] = report.objective_trace;
    doc["report"] = std::move(jr);
    if (comparison) {
        json arr = json::array();
        for (const auto& [name, d] : comparison->metrics)
            arr.push_back({{"name", name},
                           {"a", d.a},
                           {"b", d.b},
                           {"delta", d.delta},
                           {"winner", d.winner}});
        doc["comparison"] = {{"metrics", std::move(arr)}};
    }
    write_text(doc_path, doc.dump(2) + "\n");
}

ReportDocument read_report(const std::string& doc_path) {
    json doc = parse_file(doc_path, "report");
    check_schema_version(doc, "report");
    ReportDocument out;
    const json& jr = require(doc, "report", "report document");
    out.report.objective = number(jr, "objective", "report");
    out.report.per_cluster_load = number_array(jr, "per_cluster_load", "report");
    out.report.mean_dist_all = number(jr, "mean_dist_all", "report");
    out.report.mean_dist_weighted = number(jr, "mean_dist_weighted", "report");
    out.report.mean_dist_highload = number(jr, "mean_dist_highload", "report");
    out.report.highload_threshold = number(jr, "highload_threshold", "report");
    out.report.objective_trace = number_array(jr, "objective_trace", "report");
    if (doc.contains("comparison")) {
        metrics::ComparisonRecord rec;
        const json& arr = require(doc.at("comparison"), "metrics", "comparison");
        if (!arr.is_array()) throw ParseError("comparison field \"metrics\" must be an array");
        for (const json& e : arr) {
            const json& name = require(e, "name", "comparison metric");
            if (!name.is_string()) throw ParseError("comparison metric \"name\" must be a string");
            metrics::MetricDelta d;
            d.a = number(e, "a", "comparison metric");
            d.b = number(e, "b", "comparison metric");
            d.delta = number(e, "delta", "comparison metric");
            const json& winner = require(e, "winner", "comparison metric");
            if (!winner.is_string())
                throw ParseError("comparison metric \"winner\" must be a string");
            d.winner = winner.get<std::string>();
            rec.metrics.emplace_back(name.get<std::string>(), d);
        }
        out.comparison = std::move(rec);
    }
    return out;
}

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 40.0;

const char* const kPalette[12] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                  "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg_string(const Scenario& s, const Placement& p) {
    if (p.centroids.empty()) throw InvalidParams("placement has no centroids");
    double min_load = 0.0;
    double max_load = 0.0;
    if (!s.users.empty()) {
        min_load = max_load = s.users.front().load;
        for (const User& u : s.users) {
            min_load = std::min(min_load, u.load);
            max_load = std::max(max_load, u.load);
        }
    }

    const double inner = kCanvas - 2.0 * kMargin;
    auto sx = [&](double x) { return kMargin + (x - s.area.xmin) / s.area.width() * inner; };
    auto sy = [&](double y) {
        return kCanvas - kMargin - (y - s.area.ymin) / s.area.height() * inner;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 640\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";
    svg += "  <rect x=\"40\" y=\"40\" width=\"560\" height=\"560\" fill=\"none\" "
           "stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    const int k = static_cast<int>(p.centroids.size());
    for (const User& u : s.users) {
        auto it = p.assignment.find(u.id);
        if (it == p.assignment.end()) throw UncoveredUser(u.id);
        const int c = it->second;
        if (c < 0 || c >= k)
            throw InvalidParams("assignment index out of range for user '" + u.id + "'");
        const double r = 2.0 + 4.0 * (u.load - min_load) / (max_load - min_load + 1e-12);
        svg += "  <circle class=\"user\" cx=\"" + fixed3(sx(u.x)) + "\" cy=\"" +
               fixed3(sy(u.y)) + "\" r=\"" + fixed3(r) + "\" fill=\"" + kPalette[c % 12] +
               "\"/>\n";
    }
    for (int i = 0; i < k; ++i) {
        const double cx = sx(p.centroids[static_cast<std::size_t>(i)].x);
        const double cy = sy(p.centroids[static_cast<std::size_t>(i)].y);
        svg += "  <path class=\"centroid\" d=\"M " + fixed3(cx - 7.0) + " " + fixed3(cy) +
               " L " + fixed3(cx + 7.0) + " " + fixed3(cy) + " M " + fixed3(cx) + " " +
               fixed3(cy - 7.0) + " L " + fixed3(cx) + " " + fixed3(cy + 7.0) + "\" stroke=\"" +
               kPalette[i % 12] + "\" stroke-width=\"2.5\" fill=\"none\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void render_svg(const Scenario& s, const Placement& p, const std::string& path) {
    write_text(path, render_svg_string(s, p));
}

}  // namespace uavplace::io
