#pragma once

#include "lmsym/audit.hpp"
#include "lmsym/catalog.hpp"
#include "lmsym/classifier.hpp"
#include "lmsym/error.hpp"
#include "lmsym/group.hpp"
#include "lmsym/group_io.hpp"
#include "lmsym/lie_checks.hpp"
#include "lmsym/report.hpp"
#include "lmsym/ring.hpp"
