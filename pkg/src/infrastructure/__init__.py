# Infrastructure layer - logging, file loaders, literal parsing
