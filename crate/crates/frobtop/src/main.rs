fn main() { frobtop::cli::noop(); }
