#include "cobord/config_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>

namespace cobord {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what)
{
    throw parse_error(origin + ": " + what);
}

CartierDiv parse_div(const json& j, std::size_t m, const std::string& origin,
                     const std::string& name)
{
    if (!j.is_array() || j.size() != m)
        fail(origin, "divisor '" + name + "' must be an array of " + std::to_string(m) +
                         " multiplicities");
    CartierDiv d;
    for (const auto& v : j) {
        if (!v.is_number_unsigned())
            fail(origin, "divisor '" + name + "' has a negative or non-integer multiplicity");
        d.mults.push_back(v.get<std::uint32_t>());
    }
    return d;
}

BundleExpr parse_bundle(const json& j, std::size_t m, const std::vector<std::string>& symbols,
                        const std::string& origin, const std::string& name)
{
    BundleExpr b;
    b.component_part.assign(m, 0);
    if (!j.is_object())
        fail(origin, "bundle '" + name + "' must be an object");
    if (j.contains("components")) {
        const auto& c = j.at("components");
        if (!c.is_array() || c.size() != m)
            fail(origin, "bundle '" + name + "': components must list " + std::to_string(m) +
                             " integers");
        for (std::size_t k = 0; k < m; ++k)
            b.component_part[k] = c[k].get<std::int64_t>();
    }
    if (j.contains("symbols")) {
        for (const auto& [sym, e] : j.at("symbols").items()) {
            if (std::find(symbols.begin(), symbols.end(), sym) == symbols.end())
                fail(origin, "bundle '" + name + "' uses undeclared symbol '" + sym + "'");
            if (e.get<std::int64_t>() != 0)
                b.free_part[sym] = e.get<std::int64_t>();
        }
    }
    return b;
}

}  // namespace

PseudoDiv ConfigFile::resolve(const std::string& name) const
{
    if (auto it = divisors.find(name); it != divisors.end())
        return PseudoDiv::divisorial(it->second);
    if (auto it = bundles.find(name); it != bundles.end())
        return PseudoDiv::global(it->second);
    throw parse_error("unknown divisor or bundle '" + name + "'");
}

PseudoSeq ConfigFile::resolve_seq(const std::vector<std::string>& names) const
{
    PseudoSeq out;
    for (const auto& n : names)
        out.push_back(resolve(n));
    return out;
}

ConfigFile load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error(path + ": cannot open file");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config(text, path);
}

ConfigFile parse_config(const std::string& text, const std::string& origin)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, e.what());
    }

    ConfigFile f;
    try {
        if (!j.contains("dimension") || !j.at("dimension").is_number_unsigned())
            fail(origin, "field 'dimension' (unsigned) is required");
        f.cfg.dim = j.at("dimension").get<std::uint32_t>();

        if (!j.contains("components") || !j.at("components").is_array())
            fail(origin, "field 'components' (array of names) is required");
        for (const auto& c : j.at("components"))
            f.cfg.components.push_back(c.get<std::string>());
        const std::size_t m = f.cfg.components.size();

        f.cfg.faces.insert(0);
        if (j.contains("faces")) {
            for (const auto& face : j.at("faces")) {
                if (!face.is_array())
                    fail(origin, "each face must be an array of 1-based component indices");
                Face mask = 0;
                for (const auto& idx : face) {
                    std::uint64_t i = idx.get<std::uint64_t>();
                    if (i < 1 || i > m)
                        fail(origin, "face index " + std::to_string(i) + " out of range");
                    mask |= 1u << (i - 1);
                }
                f.cfg.faces.insert(mask);
            }
        }
        try {
            f.cfg.validate();
        } catch (const std::exception& e) {
            fail(origin, e.what());
        }

        if (j.contains("trunc"))
            f.trunc = j.at("trunc").get<std::uint32_t>();
        if (j.contains("symbols"))
            for (const auto& s : j.at("symbols"))
                f.symbols.push_back(s.get<std::string>());

        if (j.contains("divisors"))
            for (const auto& [name, val] : j.at("divisors").items())
                f.divisors.emplace(name, parse_div(val, m, origin, name));
        if (j.contains("bundles"))
            for (const auto& [name, val] : j.at("bundles").items())
                f.bundles.emplace(name, parse_bundle(val, m, f.symbols, origin, name));

        if (j.contains("pseudo_seq")) {
            for (const auto& entry : j.at("pseudo_seq")) {
                if (entry.contains("div")) {
                    auto name = entry.at("div").get<std::string>();
                    auto it = f.divisors.find(name);
                    if (it == f.divisors.end())
                        fail(origin, "pseudo_seq references unknown divisor '" + name + "'");
                    f.default_seq.push_back(PseudoDiv::divisorial(it->second));
                } else if (entry.contains("global")) {
                    auto name = entry.at("global").get<std::string>();
                    auto it = f.bundles.find(name);
                    if (it == f.bundles.end())
                        fail(origin, "pseudo_seq references unknown bundle '" + name + "'");
                    f.default_seq.push_back(PseudoDiv::global(it->second));
                } else {
                    fail(origin, "pseudo_seq entries must be {\"div\": name} or "
                                 "{\"global\": name}");
                }
            }
        }
    } catch (const json::exception& e) {
        fail(origin, e.what());
    }
    return f;
}

}  // namespace cobord
