#pragma once

#include "refloor/bps.hpp"
#include "refloor/chrec.hpp"
#include "refloor/classes.hpp"
#include "refloor/counts.hpp"
#include "refloor/diagrams.hpp"
#include "refloor/error.hpp"
#include "refloor/io.hpp"
#include "refloor/markings.hpp"
#include "refloor/partitions.hpp"
#include "refloor/qalgebra.hpp"
