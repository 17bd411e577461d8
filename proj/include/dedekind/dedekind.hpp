#pragma once

#include "dedekind/axioms.hpp"
#include "dedekind/base_pid.hpp"
#include "dedekind/class_group.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/factor.hpp"
#include "dedekind/ideal.hpp"
#include "dedekind/json_io.hpp"
#include "dedekind/matrix.hpp"
#include "dedekind/nonexample.hpp"
#include "dedekind/order.hpp"
#include "dedekind/places.hpp"
