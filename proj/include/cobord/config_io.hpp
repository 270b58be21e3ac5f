#pragma once

#include "cobord/omega.hpp"

#include <map>
#include <string>

namespace cobord {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parsed configuration document: the frame plus named divisors,
// bundles and the default pseudo-divisor sequence.
struct ConfigFile {
    SncConfig cfg;
    std::uint32_t trunc = 0;  // 0: unset, use the CLI default
    std::vector<std::string> symbols;
    std::map<std::string, CartierDiv> divisors;
    std::map<std::string, BundleExpr> bundles;
    PseudoSeq default_seq;

    // A name is either a divisor (divisorial entry) or a bundle
    // (global entry).
    PseudoDiv resolve(const std::string& name) const;
    PseudoSeq resolve_seq(const std::vector<std::string>& names) const;
};

ConfigFile load_config(const std::string& path);
ConfigFile parse_config(const std::string& text, const std::string& origin);

}  // namespace cobord
