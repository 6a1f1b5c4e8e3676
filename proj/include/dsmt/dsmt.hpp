#pragma once

#include "dsmt/error.hpp"
#include "dsmt/lattice.hpp"
#include "dsmt/exprparse.hpp"
#include "dsmt/bba.hpp"
#include "dsmt/model.hpp"
#include "dsmt/rules.hpp"
#include "dsmt/dynamic.hpp"
