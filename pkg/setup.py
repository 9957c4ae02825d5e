from setuptools import setup

import django_bandix as meta

setup(name='django-bandix',
      description='Bounds for the band index and the flat band index of links.',
      version='.'.join(map(str, meta.__version__)),
      author=meta.__author__,
      author_email=meta.__contact__,
      url=meta.__homepage__,
      license=meta.__license__,
      keywords='django knot band index seifert surface',
      classifiers=[
          "Framework :: Django",
          "Environment :: Console",
          "Intended Audience :: Science/Research",
          "Operating System :: OS Independent",
          "Programming Language :: Python :: 3",
          "Topic :: Scientific/Engineering :: Mathematics",
      ],
      install_requires=[
          'django>=3.1',
          'networkx>=2.6',
          'sympy>=1.9',
      ],
      entry_points={
          'console_scripts': ['bandix = django_bandix.cli:main'],
      },
      packages=[
          'django_bandix',
          'django_bandix.management',
          'django_bandix.management.commands',
      ])
