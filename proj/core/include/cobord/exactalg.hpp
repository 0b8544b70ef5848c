#pragma once

#include "cobord/error.hpp"
#include "cobord/multipoly.hpp"
#include "cobord/omega.hpp"
#include "cobord/rational.hpp"
#include "cobord/series.hpp"
