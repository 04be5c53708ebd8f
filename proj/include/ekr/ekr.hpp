#pragma once

#include "ekr/bitset.hpp"
#include "ekr/canonical.hpp"
#include "ekr/counting.hpp"
#include "ekr/error.hpp"
#include "ekr/exactmath.hpp"
#include "ekr/family.hpp"
#include "ekr/io.hpp"
#include "ekr/probability.hpp"
#include "ekr/random.hpp"
#include "ekr/search.hpp"
