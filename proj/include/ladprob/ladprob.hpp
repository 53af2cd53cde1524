#ifndef LADPROB_LADPROB_HPP
#define LADPROB_LADPROB_HPP

#include "ladprob/alpha.hpp"
#include "ladprob/asymptotics.hpp"
#include "ladprob/errors.hpp"
#include "ladprob/exact.hpp"
#include "ladprob/lad.hpp"
#include "ladprob/model_m1.hpp"
#include "ladprob/model_m2.hpp"
#include "ladprob/oracle.hpp"
#include "ladprob/report.hpp"

#endif
