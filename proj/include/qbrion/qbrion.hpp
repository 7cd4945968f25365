#pragma once

#include "qbrion/brion.hpp"
#include "qbrion/euler.hpp"
#include "qbrion/io.hpp"
#include "qbrion/laurent.hpp"
#include "qbrion/matroid.hpp"
#include "qbrion/permutation.hpp"
#include "qbrion/plaur.hpp"
#include "qbrion/polytope.hpp"
#include "qbrion/setfunction.hpp"
