// Bundled reference designs used by the test suites and the CLI `fixtures`
// subcommand. Texts are stored in their original row order; parse them to
// get validated designs.

#pragma once

#include <string_view>
#include <vector>

#include "pgiso/design_io.hpp"

namespace pgiso {

std::vector<std::string_view> fixture_names();
bool is_fixture(std::string_view name);

// Throw std::invalid_argument for unknown names.
std::string_view fixture_text(std::string_view name);
Design fixture_design(std::string_view name);
Spread fixture_spread(std::string_view name);
Star fixture_star(std::string_view name);

}  // namespace pgiso
