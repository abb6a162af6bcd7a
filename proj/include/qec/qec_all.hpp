#ifndef QEC_QEC_ALL_HPP
#define QEC_QEC_ALL_HPP

#include "classify.hpp"
#include "cliques.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "linalg.hpp"
#include "qec.hpp"
#include "two_clique.hpp"
#include "verify.hpp"

#endif // QEC_QEC_ALL_HPP
