#pragma once

#include "salem/check.hpp"
#include "salem/cylinder.hpp"
#include "salem/digits.hpp"
#include "salem/operators.hpp"
#include "salem/rational.hpp"
#include "salem/system.hpp"
