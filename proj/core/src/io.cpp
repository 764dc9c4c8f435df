#include "cesaro/io.hpp"

#include "cesaro/errors.hpp"

#include "json.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cesaro {
namespace {

using json = nlohmann::ordered_json;

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

double number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ValidationError(std::string("measure config: '") + key + "' must be a number");
    return j[key].get<double>();
}

std::vector<double> numbers(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ValidationError(std::string("measure config: '") + key + "' must be an array");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw ValidationError(std::string("measure config: '") + key + "' holds a non-number");
        out.push_back(v.get<double>());
    }
    return out;
}

Measure measure_from(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ValidationError("measure config: expected an object with a string 'type'");
    const std::string type = j["type"];
    if (type == "lebesgue") return Measure::lebesgue();
    if (type == "power_density")
        return Measure::power_density(number(j, "alpha"), j.contains("scale") ? number(j, "scale") : 1.0);
    if (type == "atomic") return Measure::atoms(numbers(j, "points"), numbers(j, "weights"));
    if (type == "dyadic")
        return Measure::dyadic_atoms(number(j, "weight_exponent"),
                                     j.contains("count") ? static_cast<int>(number(j, "count")) : 48);
    if (type == "mixture") {
        if (!j.contains("components") || !j["components"].is_array())
            throw ValidationError("measure config: 'components' must be an array");
        std::vector<Measure> parts;
        for (const auto& c : j["components"]) parts.push_back(measure_from(c));
        return Measure::mixture(std::move(parts));
    }
    throw ValidationError("measure config: unknown type '" + type + "'");
}

json measure_json(const Measure& mu) {
    return std::visit(overloaded{
                          [](const Atomic& a) {
                              return json{{"type", "atomic"}, {"points", a.points}, {"weights", a.weights}};
                          },
                          [](const PowerDensity& d) {
                              return json{{"type", "power_density"}, {"alpha", d.alpha}, {"scale", d.scale}};
                          },
                          [](const Lebesgue&) { return json{{"type", "lebesgue"}}; },
                          [](const Mixture& m) {
                              json parts = json::array();
                              for (const auto& c : m.components) parts.push_back(measure_json(c));
                              return json{{"type", "mixture"}, {"components", parts}};
                          },
                      },
                      mu.variant());
}

double parse_double(const std::string& token, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ValidationError("coefficient file line " + std::to_string(line) + ": cannot parse '" + token + "'");
    return v;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

Measure measure_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("measure config: ") + e.what());
    }
    return measure_from(j);
}

Measure load_measure(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open measure file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return measure_from_json(ss.str());
}

std::string measure_to_json(const Measure& mu) { return measure_json(mu).dump(2); }

PowerSeries read_coefficients(std::istream& in) {
    std::vector<complex> coeffs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string re, im, rest;
        if (!(ls >> re) || re.front() == '#') continue;
        ls >> im;
        if (ls >> rest) throw ValidationError("coefficient file line " + std::to_string(lineno) + ": too many fields");
        coeffs.emplace_back(parse_double(re, lineno), im.empty() ? 0.0 : parse_double(im, lineno));
    }
    if (coeffs.empty()) throw ValidationError("coefficient file holds no coefficients");
    return PowerSeries(std::move(coeffs));
}

PowerSeries load_coefficients(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open coefficient file " + path.string());
    return read_coefficients(in);
}

void write_coefficients(std::ostream& out, const PowerSeries& f) {
    for (const auto& c : f.coeffs()) out << format_double(c.real()) << ' ' << format_double(c.imag()) << '\n';
}

void write_trace_csv(std::ostream& out, const std::vector<int>& levels, const std::vector<double>& values) {
    out << "level,value\n";
    for (std::size_t i = 0; i < levels.size() && i < values.size(); ++i)
        out << levels[i] << ',' << format_double(values[i]) << '\n';
}

}  // namespace cesaro
