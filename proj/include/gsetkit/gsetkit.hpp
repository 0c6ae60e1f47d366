#ifndef GSETKIT_GSETKIT_HPP
#define GSETKIT_GSETKIT_HPP

#include "gsetkit/campaign.hpp"
#include "gsetkit/campaign_file.hpp"
#include "gsetkit/error.hpp"
#include "gsetkit/evaluator.hpp"
#include "gsetkit/instance.hpp"
#include "gsetkit/kv.hpp"
#include "gsetkit/metrics.hpp"
#include "gsetkit/oracle.hpp"
#include "gsetkit/registry.hpp"
#include "gsetkit/rng.hpp"
#include "gsetkit/solver.hpp"
#include "gsetkit/spin_codec.hpp"

#endif  // GSETKIT_GSETKIT_HPP
