namespace lrdip {}
