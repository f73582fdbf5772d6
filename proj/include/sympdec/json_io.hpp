#pragma once

#include <json.hpp>
#include <vector>

#include "sympdec/ab_group.hpp"
#include "sympdec/homotopy_tables.hpp"
#include "sympdec/induced_maps.hpp"
#include "sympdec/lifting.hpp"
#include "sympdec/verify.hpp"

namespace sympdec::json_io {

using json = nlohmann::json;

/// Integers that fit in int64 become numbers, larger ones decimal strings.
json integer(const Integer& x);
json group(const FgAbGroup& g);
json table_answer(const homotopy::TableAnswer& a);
json hom(const induced::AbHom& h);
json image(const induced::ImageDescriptor& d);
json bezout(const lifting::BezoutWitness& w);
json no_section(const lifting::NoSectionWitness& w);
json postnikov(const lifting::PostnikovReport& r);
json decision(const lifting::DecisionReport& r);
json verify_report(const verify::VerifyReport& r);
json verify_reports(const std::vector<verify::VerifyReport>& reports);

}  // namespace sympdec::json_io
