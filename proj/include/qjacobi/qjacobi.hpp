#pragma once

#include "qjacobi/error.hpp"
#include "qjacobi/params.hpp"
#include "qjacobi/recurrence.hpp"
#include "qjacobi/evaluate.hpp"
#include "qjacobi/relations.hpp"
#include "qjacobi/zeros.hpp"
#include "qjacobi/interlacing.hpp"
#include "qjacobi/reference_values.hpp"
#include "qjacobi/report.hpp"
