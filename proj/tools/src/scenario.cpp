#include "dtdd/app/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "dtdd/errors.hpp"

namespace dtdd::app {

ConfigError::ConfigError(const std::string& message, int line, std::string field)
    : std::runtime_error(message), line_(line), field_(std::move(field)) {}

namespace {

using boost::property_tree::ptree;

constexpr std::array<std::pair<Quantity, std::string_view>, 10> kQuantities{{
    {Quantity::DlDl, "isr_dl_dl"},
    {Quantity::UlDl, "isr_ul_dl"},
    {Quantity::UlUl, "isr_ul_ul"},
    {Quantity::DlUl, "isr_dl_ul"},
    {Quantity::DlTotal, "isr_dl_total"},
    {Quantity::UlTotal, "isr_ul_total"},
    {Quantity::DlUlClustered, "isr_dl_ul_clustered"},
    {Quantity::DlUlClusteredRhoMean, "isr_dl_ul_clustered_rho_mean"},
    {Quantity::SinrUl, "sinr_ul"},
    {Quantity::Coverage, "coverage"},
}};

constexpr std::array<std::pair<Check, std::string_view>, 9> kChecks{{
    {Check::Omega, "omega"},
    {Check::DlDl, "dl_dl"},
    {Check::UlDl, "ul_dl"},
    {Check::UlUl, "ul_ul"},
    {Check::DlUl, "dl_ul"},
    {Check::ClusterDlUl, "cluster_dl_ul"},
    {Check::Coverage, "coverage"},
    {Check::Truncation, "truncation"},
    {Check::FlatAtFullCompensation, "k1_flat"},
}};

const std::map<std::string, std::set<std::string>>& allowed_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"scenario", {"id", "quantities", "output", "sweep_oracle"}},
        {"network", {"delta", "b", "k", "p_dl", "p_target", "cell_radius", "p_noise"}},
        {"mix", {"alpha_d", "alpha_u"}},
        {"grid", {"x", "x_tilde", "gamma", "theta"}},
        {"cluster",
         {"delta_tilde", "cluster_radius", "smallcell_radius", "intensity", "n_cells", "p_small_dl",
          "p_small_target", "rho0", "rho0_angle", "p_noise"}},
        {"series", {"h_max", "rel_stop", "on_cap"}},
        {"oracle",
         {"lattice_radius", "quad_radial_order", "quad_angular_order", "mc_draws", "seed", "near_field_radius",
          "mc_near_radius", "workers"}},
        {"validate", {"checks", "omega_z", "omega_radius", "a2_constant"}},
    };
    return keys;
}

// "section.key" -> 1-based line of its definition.
std::map<std::string, int> key_lines(std::string_view text) {
    std::map<std::string, int> lines;
    std::string section;
    int n = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++n;
        boost::algorithm::trim(line);
        if (line.empty() || line.front() == ';' || line.front() == '#') continue;
        if (line.front() == '[') {
            section = boost::algorithm::trim_copy(line.substr(1, line.find(']') - 1));
            lines.emplace(section, n);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        lines.emplace(section + "." + boost::algorithm::trim_copy(line.substr(0, eq)), n);
    }
    return lines;
}

class Reader {
public:
    Reader(const ptree& tree, std::map<std::string, int> lines) : tree_(tree), lines_(std::move(lines)) {}

    int line_of(const std::string& field) const {
        auto it = lines_.find(field);
        return it == lines_.end() ? 0 : it->second;
    }

    [[noreturn]] void fail(const std::string& field, const std::string& why) const {
        const int line = line_of(field);
        std::string where = line > 0 ? "line " + std::to_string(line) + ", " : "";
        throw ConfigError(where + field + ": " + why, line, field);
    }

    // The ini reader drops empty sections, so presence is taken from the raw text.
    bool has_section(const std::string& section) const { return lines_.count(section) > 0; }

    std::optional<std::string> raw(const std::string& field) const {
        auto v = tree_.get_optional<std::string>(ptree::path_type(field, '.'));
        if (!v) return std::nullopt;
        return boost::algorithm::trim_copy(*v);
    }

    double number(const std::string& field, std::string_view text) const {
        double out = 0.0;
        const char* first = text.data();
        const char* last = text.data() + text.size();
        if (!text.empty() && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc() || ptr != last || !std::isfinite(out)) {
            fail(field, "expected a number, got '" + std::string(text) + "'");
        }
        return out;
    }

    void real(const std::string& field, double& target) const {
        if (auto v = raw(field)) target = number(field, *v);
    }

    template <class Int>
    void integer(const std::string& field, Int& target) const {
        auto v = raw(field);
        if (!v) return;
        Int out{};
        auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
        if (ec != std::errc() || ptr != v->data() + v->size()) {
            fail(field, "expected an integer, got '" + *v + "'");
        }
        target = out;
    }

    void boolean(const std::string& field, bool& target) const {
        auto v = raw(field);
        if (!v) return;
        const std::string s = boost::algorithm::to_lower_copy(*v);
        if (s == "true" || s == "yes" || s == "1") {
            target = true;
        } else if (s == "false" || s == "no" || s == "0") {
            target = false;
        } else {
            fail(field, "expected true or false, got '" + *v + "'");
        }
    }

    std::vector<std::string> list(const std::string& field) const {
        std::vector<std::string> items;
        auto v = raw(field);
        if (!v) return items;
        boost::algorithm::split(items, *v, boost::algorithm::is_any_of(","));
        for (auto& item : items) boost::algorithm::trim(item);
        if (std::any_of(items.begin(), items.end(), [](const std::string& s) { return s.empty(); })) {
            fail(field, "empty list entry");
        }
        return items;
    }

    std::optional<std::vector<double>> grid(const std::string& field) const {
        auto v = raw(field);
        if (!v) return std::nullopt;
        try {
            return parse_grid(*v);
        } catch (const ConfigError& e) {
            fail(field, e.what());
        }
    }

private:
    const ptree& tree_;
    std::map<std::string, int> lines_;
};

// Digits after the decimal point of a plain decimal token, or -1 for exponent forms.
int decimal_places(std::string_view token) {
    if (token.find_first_of("eE") != std::string_view::npos) return -1;
    const auto dot = token.find('.');
    return dot == std::string_view::npos ? 0 : static_cast<int>(token.size() - dot - 1);
}

double parse_real(std::string_view token) {
    const std::string t = boost::algorithm::trim_copy(std::string(token));
    double out = 0.0;
    const char* first = t.data();
    if (!t.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), out);
    if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(out)) {
        throw ConfigError("expected a number, got '" + t + "'");
    }
    return out;
}

void require_positive(const Reader& r, const std::string& field, double value) {
    if (!(value > 0.0)) r.fail(field, "must be positive");
}

}  // namespace

std::string_view quantity_name(Quantity q) noexcept {
    for (const auto& [k, name] : kQuantities) {
        if (k == q) return name;
    }
    return "unknown";
}

std::optional<Quantity> parse_quantity(std::string_view name) noexcept {
    for (const auto& [k, n] : kQuantities) {
        if (n == name) return k;
    }
    return std::nullopt;
}

bool is_mix_dependent(Quantity q) noexcept {
    return q == Quantity::DlTotal || q == Quantity::UlTotal;
}

bool is_cluster_quantity(Quantity q) noexcept {
    return q == Quantity::DlUlClustered || q == Quantity::DlUlClusteredRhoMean || q == Quantity::SinrUl ||
           q == Quantity::Coverage;
}

std::string_view check_name(Check c) noexcept {
    for (const auto& [k, name] : kChecks) {
        if (k == c) return name;
    }
    return "unknown";
}

std::optional<Check> parse_check(std::string_view name) noexcept {
    for (const auto& [k, n] : kChecks) {
        if (n == name) return k;
    }
    return std::nullopt;
}

std::vector<double> parse_grid(std::string_view text) {
    const std::string s = boost::algorithm::trim_copy(std::string(text));
    if (s.empty()) throw ConfigError("empty grid");
    std::vector<std::string> parts;
    boost::algorithm::split(parts, s, boost::algorithm::is_any_of(":"));
    for (auto& p : parts) boost::algorithm::trim(p);

    if (parts.size() == 1) {
        std::vector<std::string> items;
        boost::algorithm::split(items, s, boost::algorithm::is_any_of(","));
        std::vector<double> out;
        for (const auto& item : items) out.push_back(parse_real(item));
        return out;
    }
    if (parts.size() == 4 && boost::algorithm::to_lower_copy(parts[0]) == "log") {
        const double a = parse_real(parts[1]);
        const double b = parse_real(parts[2]);
        const double n = parse_real(parts[3]);
        if (!(a > 0.0 && b > 0.0)) throw ConfigError("log grid bounds must be positive");
        if (!(n >= 2.0) || n != std::floor(n)) throw ConfigError("log grid needs an integer count >= 2");
        const int count = static_cast<int>(n);
        std::vector<double> out(static_cast<std::size_t>(count));
        const double la = std::log10(a);
        const double lb = std::log10(b);
        for (int i = 0; i < count; ++i) {
            out[static_cast<std::size_t>(i)] = std::pow(10.0, la + (lb - la) * i / (count - 1));
        }
        out.front() = a;
        out.back() = b;
        return out;
    }
    if (parts.size() == 3) {
        const double start = parse_real(parts[0]);
        const double stop = parse_real(parts[1]);
        const double step = parse_real(parts[2]);
        if (!(step > 0.0) || stop < start) throw ConfigError("range needs start <= stop and a positive step");
        const double span = (stop - start) / step;
        if (span > 1e6) throw ConfigError("range has too many points");
        const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
        const int places = std::max({decimal_places(parts[0]), decimal_places(parts[2])});
        const bool decimal = decimal_places(parts[0]) >= 0 && decimal_places(parts[2]) >= 0 && places <= 15;
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(count));
        if (decimal) {
            // Integer arithmetic in units of 10^-places keeps 0.15 from becoming 0.15000000000000002.
            const double scale = std::pow(10.0, places);
            const double i0 = std::round(start * scale);
            const double di = std::round(step * scale);
            for (long i = 0; i < count; ++i) out.push_back((i0 + static_cast<double>(i) * di) / scale);
        } else {
            for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
        }
        return out;
    }
    throw ConfigError("grid '" + s + "' is neither a list, start:stop:step, nor log:a:b:n");
}

Scenario parse_scenario(std::string_view text, const std::string& source) {
    ptree tree;
    {
        std::istringstream in{std::string(text)};
        try {
            boost::property_tree::ini_parser::read_ini(in, tree);
        } catch (const boost::property_tree::ini_parser_error& e) {
            throw ConfigError(source + ": line " + std::to_string(e.line()) + ": " + e.message(),
                              static_cast<int>(e.line()));
        }
    }
    const Reader r(tree, key_lines(text));

    for (const auto& [section, child] : tree) {
        auto it = allowed_keys().find(section);
        if (!child.data().empty()) r.fail(section, "keys must live inside a [section]");
        if (it == allowed_keys().end()) r.fail(section, "unknown section");
        for (const auto& [key, value] : child) {
            if (!it->second.count(key)) r.fail(section + "." + key, "unknown key");
        }
    }

    Scenario s;
    if (auto v = r.raw("scenario.id")) s.id = *v;
    if (auto v = r.raw("scenario.output")) s.output_path = *v;
    r.boolean("scenario.sweep_oracle", s.sweep_oracle);
    for (const auto& name : r.list("scenario.quantities")) {
        auto q = parse_quantity(name);
        if (!q) r.fail("scenario.quantities", "unknown quantity '" + name + "'");
        s.quantities.push_back(*q);
    }

    NetworkParams& np = s.network;
    r.real("network.delta", np.delta);
    r.real("network.p_dl", np.p_dl);
    r.real("network.p_target", np.p_target);
    r.real("network.cell_radius", np.cell_radius);
    r.real("network.p_noise", np.p_noise);
    if (auto g = r.grid("network.b")) s.b_values = *g;
    if (auto g = r.grid("network.k")) s.k_values = *g;
    for (double b : s.b_values) {
        if (!(b > 1.0)) r.fail("network.b", "every b must exceed 1");
    }
    for (double k : s.k_values) {
        if (!(k >= 0.0 && k <= 1.0)) r.fail("network.k", "every k must lie in [0, 1]");
    }
    np.b = s.b_values.front();
    np.k = s.k_values.front();
    try {
        np.validate();
    } catch (const DomainError& e) {
        r.fail("network", e.what());
    }

    const auto alpha_d = r.grid("mix.alpha_d");
    const auto alpha_u = r.grid("mix.alpha_u");
    if (alpha_d || alpha_u) {
        if (!alpha_d || !alpha_u) r.fail("mix", "alpha_d and alpha_u must be given together");
        if (alpha_d->size() != alpha_u->size()) r.fail("mix.alpha_u", "must have as many entries as alpha_d");
        s.mixes.clear();
        for (std::size_t i = 0; i < alpha_d->size(); ++i) {
            TrafficMix m{(*alpha_d)[i], (*alpha_u)[i]};
            try {
                m.validate();
            } catch (const DomainError& e) {
                r.fail("mix", "entry " + std::to_string(i + 1) + ": " + e.what());
            }
            s.mixes.push_back(m);
        }
    }

    if (auto g = r.grid("grid.x")) s.x_grid = *g;
    if (auto g = r.grid("grid.x_tilde")) s.x_tilde_grid = *g;
    if (auto g = r.grid("grid.gamma")) s.gamma_grid = *g;
    if (r.raw("grid.theta")) {
        s.thetas.clear();
        for (const auto& item : r.list("grid.theta")) {
            if (boost::algorithm::to_lower_copy(item) == "mean") {
                s.thetas.emplace_back(std::nullopt);
            } else {
                s.thetas.emplace_back(r.number("grid.theta", item));
            }
        }
    }
    for (double x : s.x_grid) {
        if (!(x >= 0.0 && x < kMaxMobileX)) r.fail("grid.x", "values must lie in [0, 1/sqrt(3))");
    }
    for (double x : s.x_tilde_grid) {
        if (!(x >= 0.0 && x < 1.0)) r.fail("grid.x_tilde", "values must lie in [0, 1)");
    }
    for (double g : s.gamma_grid) {
        if (!(g > 0.0)) r.fail("grid.gamma", "values must be positive");
    }

    if (r.has_section("cluster")) {
        ClusterParams cp;
        r.real("cluster.delta_tilde", cp.delta_tilde);
        require_positive(r, "cluster.delta_tilde", cp.delta_tilde);
        cp.cluster_radius = 0.4 * cp.delta_tilde;
        cp.smallcell_radius = cp.delta_tilde / 5.0;
        r.real("cluster.cluster_radius", cp.cluster_radius);
        r.real("cluster.smallcell_radius", cp.smallcell_radius);
        require_positive(r, "cluster.cluster_radius", cp.cluster_radius);
        const bool has_intensity = r.raw("cluster.intensity").has_value();
        const bool has_cells = r.raw("cluster.n_cells").has_value();
        r.integer("cluster.n_cells", cp.n_cells);
        if (has_intensity) {
            r.real("cluster.intensity", cp.intensity);
            if (!has_cells) cp.n_cells = 0;
        } else {
            cp.intensity = cp.n_cells / (std::numbers::pi * cp.cluster_radius * cp.cluster_radius);
        }
        r.real("cluster.p_small_dl", cp.p_small_dl);
        r.real("cluster.p_small_target", cp.p_small_target);
        r.real("cluster.p_noise", cp.p_noise);
        if (auto v = r.raw("cluster.rho0_angle")) {
            if (boost::algorithm::to_lower_copy(*v) == "mean") {
                s.rho0_angle_mean = true;
            } else {
                cp.rho0_angle = r.number("cluster.rho0_angle", *v);
            }
        }
        s.rho0_values = r.grid("cluster.rho0").value_or(std::vector<double>{0.0});
        for (double rho0 : s.rho0_values) {
            cp.rho0 = rho0;
            try {
                cp.validate();
            } catch (const DomainError& e) {
                r.fail("cluster", e.what());
            }
        }
        cp.rho0 = s.rho0_values.front();
        s.cluster = cp;
    }

    SeriesControl& sc = s.series;
    r.integer("series.h_max", sc.h_max);
    r.real("series.rel_stop", sc.rel_stop);
    if (auto v = r.raw("series.on_cap")) {
        const std::string p = boost::algorithm::to_lower_copy(*v);
        if (p == "throw") {
            sc.on_cap = CapPolicy::Throw;
        } else if (p == "truncate") {
            sc.on_cap = CapPolicy::Truncate;
        } else {
            r.fail("series.on_cap", "expected throw or truncate");
        }
    }
    try {
        sc.validate();
    } catch (const DomainError& e) {
        r.fail("series", e.what());
    }

    if (r.has_section("oracle")) {
        OracleConfig oc;
        r.real("oracle.lattice_radius", oc.lattice_radius);
        r.integer("oracle.quad_radial_order", oc.quad_radial_order);
        r.integer("oracle.quad_angular_order", oc.quad_angular_order);
        r.integer("oracle.mc_draws", oc.mc_draws);
        r.integer("oracle.seed", oc.seed);
        r.real("oracle.near_field_radius", oc.near_field_radius);
        r.real("oracle.mc_near_radius", oc.mc_near_radius);
        r.integer("oracle.workers", oc.workers);
        try {
            oc.validate();
        } catch (const DomainError& e) {
            r.fail("oracle", e.what());
        }
        s.oracle = oc;
    }

    for (const auto& name : r.list("validate.checks")) {
        auto c = parse_check(name);
        if (!c) r.fail("validate.checks", "unknown check '" + name + "'");
        s.checks.push_back(*c);
    }
    if (auto g = r.grid("validate.omega_z")) s.omega_z = *g;
    for (double z : s.omega_z) {
        if (!(z > 1.0)) r.fail("validate.omega_z", "values must exceed 1");
    }
    r.real("validate.omega_radius", s.omega_radius);
    if (!(s.omega_radius >= 10.0)) r.fail("validate.omega_radius", "must be at least 10");
    if (auto v = r.raw("validate.a2_constant")) {
        const std::string c = boost::algorithm::to_lower_copy(*v);
        if (c == "lattice_sum") {
            s.a2_constant = A2Constant::LatticeSum;
        } else if (c == "as_printed") {
            s.a2_constant = A2Constant::AsPrinted;
        } else {
            r.fail("validate.a2_constant", "expected lattice_sum or as_printed");
        }
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.string());
}

Scenario preset_scenario(std::string_view name) {
    Scenario s;
    s.id = std::string(name);
    s.b_values = {1.2, 1.75};
    s.k_values = {0.8};
    s.oracle = OracleConfig{};
    s.sweep_oracle = true;
    if (name == "fig2" || name == "fig3") {
        // Power ratio P/P* = 10 and R/delta = 0.45 are preset choices.
        s.x_grid = parse_grid("0.01:0.5:0.01");
        s.thetas = {std::nullopt};
        if (name == "fig2") {
            s.mixes = {{1.0, 0.0}, {0.75, 0.25}, {0.5, 0.5}};
            s.quantities = {Quantity::DlTotal, Quantity::DlDl, Quantity::UlDl};
        } else {
            s.mixes = {{0.0, 1.0}, {0.25, 0.75}, {0.5, 0.5}};
            s.quantities = {Quantity::UlTotal, Quantity::UlUl, Quantity::DlUl};
        }
        return s;
    }
    if (name == "fig5") {
        s.network.p_dl = 1.0;
        s.cluster = ClusterParams::from_macro(1.0);
        s.rho0_values = {0.0};
        s.x_grid = parse_grid("0.01:0.57:0.01");
        s.x_tilde_grid = parse_grid("0.01:0.99:0.01");
        s.quantities = {Quantity::DlUlClustered, Quantity::DlUlClusteredRhoMean, Quantity::DlUl};
        return s;
    }
    if (name == "coverage") {
        s.cluster = ClusterParams::from_macro(1.0);
        s.rho0_values = {0.0};
        s.gamma_grid = parse_grid("log:1e-3:10:20");
        s.x_tilde_grid = parse_grid("0.01:0.99:0.01");
        s.quantities = {Quantity::Coverage, Quantity::SinrUl};
        return s;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected fig2, fig3, fig5 or coverage)", 0,
                      "preset");
}

std::vector<Check> default_checks(const Scenario& s) {
    std::vector<Check> out{Check::Omega};
    if (!s.x_grid.empty()) {
        out.insert(out.end(), {Check::DlDl, Check::UlDl, Check::UlUl, Check::DlUl, Check::Truncation,
                               Check::FlatAtFullCompensation});
    }
    if (s.cluster && !s.x_tilde_grid.empty()) out.push_back(Check::ClusterDlUl);
    if (s.cluster && !s.gamma_grid.empty()) out.push_back(Check::Coverage);
    return out;
}

void validate_for_sweep(const Scenario& s) {
    if (s.quantities.empty()) throw ConfigError("scenario.quantities: nothing to sweep", 0, "scenario.quantities");
    bool macro = false;
    bool ul_dl = false;
    for (Quantity q : s.quantities) {
        if (is_cluster_quantity(q)) {
            if (!s.cluster) {
                throw ConfigError(std::string(quantity_name(q)) + " needs a [cluster] section", 0, "cluster");
            }
            if (s.rho0_values.size() != 1) {
                throw ConfigError("cluster.rho0: sweeps take a single value", 0, "cluster.rho0");
            }
            if (q == Quantity::Coverage) {
                if (s.gamma_grid.empty()) throw ConfigError("grid.gamma: empty grid", 0, "grid.gamma");
            } else if (s.x_tilde_grid.empty()) {
                throw ConfigError("grid.x_tilde: empty grid", 0, "grid.x_tilde");
            }
        } else {
            macro = true;
            ul_dl = ul_dl || q == Quantity::UlDl || q == Quantity::DlTotal;
        }
    }
    if (macro && s.x_grid.empty()) throw ConfigError("grid.x: empty grid", 0, "grid.x");
    if (ul_dl) {
        for (double x : s.x_grid) {
            if (!(x + s.network.cell_radius / s.network.delta < 1.0)) {
                throw ConfigError("grid.x: UL->DL needs x + cell_radius/delta < 1, got x = " + std::to_string(x), 0,
                                  "grid.x");
            }
        }
    }
    if (s.sweep_oracle) {
        if (!s.oracle) throw ConfigError("scenario.sweep_oracle needs an [oracle] section", 0, "oracle");
        if (s.thetas.size() != 1) throw ConfigError("grid.theta: sweeps take a single theta", 0, "grid.theta");
    }
}

void validate_for_checks(const Scenario& s) {
    if (!s.oracle) throw ConfigError("validate needs an [oracle] section", 0, "oracle");
    const auto checks = s.checks.empty() ? default_checks(s) : s.checks;
    for (Check c : checks) {
        switch (c) {
            case Check::DlDl:
            case Check::UlDl:
            case Check::UlUl:
            case Check::DlUl:
            case Check::Truncation:
            case Check::FlatAtFullCompensation:
                if (s.x_grid.empty()) {
                    throw ConfigError("check " + std::string(check_name(c)) + " needs grid.x", 0, "grid.x");
                }
                break;
            case Check::ClusterDlUl:
                if (!s.cluster || s.x_tilde_grid.empty()) {
                    throw ConfigError("check cluster_dl_ul needs [cluster] and grid.x_tilde", 0, "grid.x_tilde");
                }
                break;
            case Check::Coverage:
                if (!s.cluster || s.gamma_grid.empty()) {
                    throw ConfigError("check coverage needs [cluster] and grid.gamma", 0, "grid.gamma");
                }
                break;
            case Check::Omega:
                break;
        }
    }
    const bool ul_dl = std::find(checks.begin(), checks.end(), Check::UlDl) != checks.end();
    if (ul_dl) {
        for (double x : s.x_grid) {
            if (!(x + s.network.cell_radius / s.network.delta < 1.0)) {
                throw ConfigError("grid.x: UL->DL needs x + cell_radius/delta < 1", 0, "grid.x");
            }
        }
    }
}

}  // namespace dtdd::app
