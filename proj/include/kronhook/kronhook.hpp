#pragma once

#include "kronhook/conversion.hpp"
#include "kronhook/io.hpp"
#include "kronhook/kronecker.hpp"
#include "kronhook/order.hpp"
#include "kronhook/partition.hpp"
#include "kronhook/random.hpp"
#include "kronhook/tableau.hpp"
#include "kronhook/words.hpp"
