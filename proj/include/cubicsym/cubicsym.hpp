#pragma once

#include "arith.hpp"
#include "classifier.hpp"
#include "eigenbasis.hpp"
#include "family.hpp"
#include "field.hpp"
#include "fixedlocus.hpp"
#include "golden.hpp"
#include "groebner.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "render.hpp"
#include "table.hpp"
#include "verify.hpp"
