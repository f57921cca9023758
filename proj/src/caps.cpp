#include "abelia/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "abelia/error.hpp"

namespace abelia {

  namespace {

    struct Field {
      std::string_view   key;
      std::size_t Caps::*member;
    };

    constexpr Field fields[] = {{"cg", &Caps::cg},
                                {"lattice", &Caps::lattice},
                                {"hom_src", &Caps::hom_src},
                                {"hom_tgt", &Caps::hom_tgt},
                                {"sub", &Caps::subtraction},
                                {"free_pos", &Caps::free_positions},
                                {"free_size", &Caps::free_carrier},
                                {"terms", &Caps::term_ops}};

    std::string_view trim(std::string_view s) {
      auto first = s.find_first_not_of(" \t");
      if (first == std::string_view::npos) {
        return {};
      }
      return s.substr(first, s.find_last_not_of(" \t") - first + 1);
    }

  }  // namespace

  Caps Caps::parse(std::string_view spec) {
    Caps caps;
    while (!spec.empty()) {
      auto comma = spec.find(',');
      auto item  = spec.substr(0, comma);
      spec = comma == std::string_view::npos ? std::string_view{}
                                             : spec.substr(comma + 1);
      if (trim(item).empty()) {
        continue;
      }
      auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw Error("malformed cap '" + std::string(item) + "'");
      }
      auto key   = trim(item.substr(0, eq));
      auto value = trim(item.substr(eq + 1));
      std::size_t parsed = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw Error("malformed value for cap '" + std::string(key) + "'");
      }
      bool known = false;
      for (auto const& f : fields) {
        if (f.key == key) {
          caps.*(f.member) = parsed;
          known            = true;
        }
      }
      if (!known) {
        throw Error("unknown cap '" + std::string(key) + "'");
      }
    }
    return caps;
  }

  Caps Caps::from_environment() {
    char const* env = std::getenv("ABELIA_CAPS");
    return env == nullptr ? Caps{} : parse(env);
  }

  std::string Caps::to_string() const {
    std::string out;
    for (auto const& f : fields) {
      out += (out.empty() ? "" : ",") + std::string(f.key) + "="
             + std::to_string(this->*(f.member));
    }
    return out;
  }

}  // namespace abelia
