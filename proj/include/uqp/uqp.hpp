#pragma once

#include "uqp/arith.hpp"
#include "uqp/error.hpp"
#include "uqp/half_int.hpp"
#include "uqp/hopf.hpp"
#include "uqp/irrep.hpp"
#include "uqp/matrix.hpp"
#include "uqp/oracle.hpp"
#include "uqp/report.hpp"
#include "uqp/verify.hpp"
#include "uqp/weightfn.hpp"
