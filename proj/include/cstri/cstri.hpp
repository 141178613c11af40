#pragma once

#include "cstri/bigint.hpp"
#include "cstri/complex.hpp"
#include "cstri/cs.hpp"
#include "cstri/homology.hpp"
#include "cstri/io.hpp"
#include "cstri/kuhnel.hpp"
#include "cstri/prism.hpp"
#include "cstri/tower.hpp"
#include "cstri/verify.hpp"
