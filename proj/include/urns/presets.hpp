#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "urns/urn.hpp"

namespace urns::presets {

UrnSpec pills();
// r-size pills, colors (n_1, ..., n_r); absorbed once no size-r pill is left.
UrnSpec rpills(int r);
UrnSpec pills_variant();
UrnSpec cannibal();
UrnSpec cannibal_unmodified();
UrnSpec okcorral();
UrnSpec sampling();

// Names: pills, rpills:<r>, pills-variant, cannibal, cannibal-unmodified,
// okcorral, sampling. Throws SpecError for unknown names.
UrnSpec by_name(std::string_view name);
TypeLabel expected_type(std::string_view name);

const std::vector<std::string>& names();  // rpills listed as "rpills:3"

}  // namespace urns::presets
