#pragma once

#include "sarkisov/bounds.hpp"
#include "sarkisov/dplattice.hpp"
#include "sarkisov/enumerate.hpp"
#include "sarkisov/error.hpp"
#include "sarkisov/icalc.hpp"
#include "sarkisov/ledger.hpp"
#include "sarkisov/linkeq.hpp"
#include "sarkisov/rational.hpp"
#include "sarkisov/reference_table.hpp"
#include "sarkisov/serialize.hpp"
