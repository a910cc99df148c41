#pragma once

#include "sampeng/embedding.hpp"
#include "sampeng/entropy.hpp"
#include "sampeng/error.hpp"
#include "sampeng/graph.hpp"
#include "sampeng/hop_structure.hpp"
#include "sampeng/io.hpp"
#include "sampeng/parallel.hpp"
#include "sampeng/sweep.hpp"
#include "sampeng/synthetic.hpp"
