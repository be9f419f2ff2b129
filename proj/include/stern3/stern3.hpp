#pragma once

#include "stern3/analytics.hpp"
#include "stern3/diatomic.hpp"
#include "stern3/farey.hpp"
#include "stern3/index.hpp"
#include "stern3/linalg.hpp"
#include "stern3/seqcore.hpp"
#include "stern3/series.hpp"
#include "stern3/subgraph.hpp"
#include "stern3/svg.hpp"
#include "stern3/verify.hpp"
