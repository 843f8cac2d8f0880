#pragma once

#include "ucg/error.hpp"
#include "ucg/field.hpp"
#include "ucg/linalg.hpp"
#include "ucg/enumerate.hpp"
#include "ucg/quadform.hpp"
#include "ucg/geometry.hpp"
#include "ucg/metric.hpp"
#include "ucg/classify.hpp"
#include "ucg/models.hpp"
#include "ucg/io.hpp"
#include "ucg/oracle.hpp"
#include "ucg/verify.hpp"
