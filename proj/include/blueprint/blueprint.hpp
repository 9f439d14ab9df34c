#pragma once

#include <blueprint/blobs.hpp>
#include <blueprint/components.hpp>
#include <blueprint/extractor.hpp>
#include <blueprint/harness.hpp>
#include <blueprint/ir.hpp>
#include <blueprint/ir_json.hpp>
#include <blueprint/raster.hpp>
#include <blueprint/scorer.hpp>
#include <blueprint/svg.hpp>
#include <blueprint/synth.hpp>
#include <blueprint/validator.hpp>
#include <blueprint/vector_plan.hpp>
